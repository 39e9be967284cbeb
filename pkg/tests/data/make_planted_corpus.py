"""Generate the committed planted corpus and its oracle-derived expectations.

Run from the repo root:

    python tests/data/make_planted_corpus.py

Thirty synthetic documents get a ramped amount of planted target evidence,
so both scorers should broadly agree on who the strong documents are. The
expected top-10 rank agreement is computed by the brute-force oracle (not
the library) and frozen into planted_expected.json next to the corpus.
"""
from __future__ import annotations

import json
import random
import sys
from pathlib import Path

TESTS_DIR = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(TESTS_DIR))

import oracle  # noqa: E402
from interank.connectors import record_fixture, result_id_for_url  # noqa: E402
from interank.rerank import SearchResult  # noqa: E402

SEED = 20260801
N_DOCS = 30

TARGET = ["mars", "stellar", "red planet"]
COMPETITORS = ["rover"]
STOPWORDS = ["the", "a", "of"]

FILLER = [
    "dust", "crater", "orbit", "sample", "mission", "camera", "data",
    "signal", "hill", "valley", "rock", "ice", "wind", "storm", "photo",
]


def build_tokens(rng: random.Random, i: int) -> list[str]:
    planted = ["mars"] * (i // 3)
    planted += ["stellar"] * ((1 if i % 3 == 0 else 0) + i // 10)
    if i % 7 == 0:
        planted += ["red", "planet"]
    if (N_DOCS - 1 - i) % 5 == 0:
        planted += ["rover", "rover"]
    length = 40 + (i * 7) % 20
    filler_count = max(length - len(planted), 5)
    tokens = planted + [rng.choice(FILLER) for _ in range(filler_count)]
    tokens += [rng.choice(STOPWORDS) for _ in range(5)]
    rng.shuffle(tokens)
    return tokens


def main() -> None:
    rng = random.Random(SEED)
    token_lists = [build_tokens(rng, i) for i in range(N_DOCS)]

    target = {tuple(t.split()) for t in TARGET}
    competitors = {tuple(c.split()) for c in COMPETITORS}
    stopwords = frozenset(STOPWORDS)

    mm = oracle.mm_scores(token_lists, target, competitors, stopwords)
    tfidf = oracle.tfidf_scores(token_lists, target, stopwords)
    mm_ranks = oracle.rank_by_score(mm)
    tfidf_ranks = oracle.rank_by_score(tfidf)

    # walk the mm order's top ten and read each doc's tfidf position
    mm_order = sorted(range(N_DOCS), key=lambda i: mm_ranks[i])[:10]
    positions_in_tfidf = [tfidf_ranks[i] for i in mm_order]
    tau = oracle.pair_count_tau(positions_in_tfidf)

    results = []
    for i, tokens in enumerate(token_lists):
        url = f"https://example.org/planted/{i:02d}"
        results.append(
            SearchResult(
                id=result_id_for_url(url),
                engine_rank=i + 1,
                url=url,
                title="",
                snippet=" ".join(tokens),
            )
        )

    data_dir = Path(__file__).resolve().parent
    record_fixture(
        results,
        "planted",
        data_dir / "planted_corpus.jsonl",
        engine="synthetic",
        recorded_at="2026-08-01T00:00:00Z",
    )
    expected = {
        "seed": SEED,
        "profile": {"target": TARGET, "competitors": COMPETITORS, "stopwords": STOPWORDS},
        "top10_positions_in_tfidf": positions_in_tfidf,
        "kendall_tau_top10": tau,
    }
    (data_dir / "planted_expected.json").write_text(
        json.dumps(expected, indent=2) + "\n", encoding="utf-8"
    )
    print(f"tau(top-10 mm vs tfidf) = {tau}")
    print(f"positions_in_tfidf = {positions_in_tfidf}")


if __name__ == "__main__":
    main()
