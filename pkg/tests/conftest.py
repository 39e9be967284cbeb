from __future__ import annotations

import json
from types import SimpleNamespace

import pytest

from interank.connectors import record_fixture, result_id_for_url
from interank.profiles import DomainProfile, ProfileEntry
from interank.rerank import SearchResult
from interank.text import build_term_stats


def make_profile(target, competitors=(), stopwords=(), name="test"):
    """Profile from plain strings; multi-word strings become phrase entries."""
    return DomainProfile(
        name=name,
        target=frozenset(ProfileEntry(tuple(t.split())) for t in target),
        competitors=frozenset(ProfileEntry(tuple(c.split())) for c in competitors),
        stopwords=frozenset(stopwords),
    )


def doc_from_tokens(tokens, stopwords=()):
    return build_term_stats(list(tokens), frozenset(stopwords))


@pytest.fixture
def space_profile():
    return make_profile(["mars", "star"], name="space")


SPACE_SNIPPETS = [
    "mars mars star dust in deep space",
    "the rover rover crossed the crater",
    "star light over a quiet hill",
    "mars rock samples and the red planet",
    "gardening tips for the spring",
    "mars mars mars probe telemetry",
    "a rover a rover and a star",
    "red planet dust storms seen from orbit",
    "cooking with dust covered pans",
    "star star mars and one rover",
]


def build_space_corpus(path, n=10):
    """Deterministic fixture corpus used by service and CLI tests."""
    results = []
    for i in range(n):
        url = f"https://example.org/space/{i}"
        results.append(
            SearchResult(
                id=result_id_for_url(url),
                engine_rank=i + 1,
                url=url,
                title=f"Result {i}",
                snippet=SPACE_SNIPPETS[i % len(SPACE_SNIPPETS)],
            )
        )
    record_fixture(results, "mars", path, engine="space-testbed", recorded_at="2026-01-01T00:00:00Z")
    return results


@pytest.fixture
def workspace(tmp_path):
    """Profiles dir + stopwords + fixture corpus + connector config on disk."""
    profiles = tmp_path / "profiles"
    profiles.mkdir()
    (profiles / "stopwords").write_text("the\na\nand\nin\nfor\nof\n", encoding="utf-8")
    (profiles / "space.target").write_text("mars\nstar\nred planet\n", encoding="utf-8")
    (profiles / "space.competitor").write_text("rover\n", encoding="utf-8")

    fixture_path = tmp_path / "space.jsonl"
    results = build_space_corpus(fixture_path)

    config = tmp_path / "connectors.json"
    config.write_text(json.dumps({"replay": {"kind": "fixture", "path": "space.jsonl"}}), encoding="utf-8")

    return SimpleNamespace(
        root=tmp_path,
        profiles=profiles,
        fixture=fixture_path,
        config=config,
        results=results,
    )


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = []
    for status, label in (("passed", "PASS"), ("failed", "FAIL")):
        for report in terminalreporter.stats.get(status, []):
            if "test_acceptance" in report.nodeid and report.when == "call":
                name = report.nodeid.split("::")[-1]
                lines.append((name, label))
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name, label in sorted(lines):
            terminalreporter.write_line(f"{label}  {name}")
