"""Profile files on disk: the target / competitor / stopwords trio.

Writes a profile directory the way a user would maintain one by hand,
loads it back through the store, and shows what validation catches.
Run from the repo root:

    python demos/profile_files_demo.py
"""
import tempfile
from pathlib import Path

from interank import ProfileStore, validate_profile

with tempfile.TemporaryDirectory() as tmp:
    root = Path(tmp)

    (root / "stopwords").write_text("# generic words carry no specificity\nthe\na\nof\n")
    (root / "space.target").write_text(
        "# what the domain is about\nMars\nred planet\nstellar wind\n"
    )
    (root / "space.competitor").write_text("# terms shared with other domains\nrover\n")

    store = ProfileStore(root)
    profile = store.load("space")
    print("target entries    :", sorted(e.text for e in profile.target))
    print("competitor entries:", sorted(e.text for e in profile.competitors))
    print("stopwords         :", sorted(profile.stopwords))
    print("violations        :", validate_profile(profile) or "none")
    print()

    # An entry on both sides would reward and penalize the same evidence,
    # so validation flags it before any scoring happens.
    (root / "space.competitor").write_text("rover\nmars\n")
    broken = store.load("space")
    for violation in validate_profile(broken):
        print("violation:", violation)
