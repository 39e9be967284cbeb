from __future__ import annotations

import random

import pytest

from interank.errors import EmptyResultSet, InvalidProfile
from interank.rerank import ScoredResult, SearchResult, rerank, scoring_text
from interank.scoring import ScorerId

from conftest import make_profile


def result(i, rank, text, title="", url=None):
    return SearchResult(
        id=f"r{i}",
        engine_rank=rank,
        url=url or f"https://example.org/{i}",
        title=title,
        snippet=text,
    )


def test_scoring_text_joins_nonempty_fields():
    r = SearchResult(id="x", engine_rank=1, url="u", title="a", snippet="b", body="")
    assert scoring_text(r) == "a b"


def test_scoring_text_all_empty():
    r = SearchResult(id="x", engine_rank=1, url="u", title="", snippet="", body="")
    assert scoring_text(r) == ""


def test_scoring_text_title_only():
    r = SearchResult(id="x", engine_rank=1, url="u", title="Mars probe", snippet="", body="")
    assert scoring_text(r) == "Mars probe"


def test_single_result_gets_rank_one(space_profile):
    scored = rerank([result(1, 1, "nothing relevant")], space_profile, ScorerId.MATCH_MISMATCH)
    assert [s.new_rank for s in scored] == [1]


def test_higher_score_wins(space_profile):
    results = [result(1, 1, "dust dust dust"), result(2, 2, "mars mars")]
    scored = rerank(results, space_profile, ScorerId.MATCH_MISMATCH)
    assert scored[0].result_id == "r2"
    assert [s.new_rank for s in scored] == [1, 2]


def test_tie_breaks_by_engine_rank(space_profile):
    results = [result(1, 7, "same text"), result(2, 3, "same text")]
    scored = rerank(results, space_profile, ScorerId.MATCH_MISMATCH)
    assert scored[0].engine_rank == 3
    assert scored[0].new_rank == 1


def test_rejects_empty_result_set(space_profile):
    with pytest.raises(EmptyResultSet):
        rerank([], space_profile, ScorerId.MATCH_MISMATCH)


def test_rejects_duplicate_ids(space_profile):
    duplicated = [result(1, 1, "a"), result(1, 2, "b")]
    with pytest.raises(ValueError, match="unique"):
        rerank(duplicated, space_profile, ScorerId.MATCH_MISMATCH)


def test_rejects_invalid_profile():
    bad = make_profile(["mars"], competitors=["mars"])
    with pytest.raises(InvalidProfile):
        rerank([result(1, 1, "mars")], bad, ScorerId.MATCH_MISMATCH)


def _random_results(rng, n):
    vocab = [f"w{i}" for i in range(12)]
    return [
        result(i, i + 1, " ".join(rng.choice(vocab) for _ in range(rng.randint(0, 20))))
        for i in range(n)
    ]


@pytest.mark.parametrize("scorer", list(ScorerId))
def test_output_is_permutation_of_input(scorer):
    rng = random.Random(5)
    profile = make_profile(["w0", "w1"], competitors=["w2"])
    for _ in range(20):
        results = _random_results(rng, rng.randint(1, 15))
        scored = rerank(results, profile, scorer)
        assert sorted(s.result_id for s in scored) == sorted(r.id for r in results)
        assert sorted(s.new_rank for s in scored) == list(range(1, len(results) + 1))


@pytest.mark.parametrize("scorer", list(ScorerId))
def test_rerank_is_stable_under_reapplication(scorer):
    rng = random.Random(11)
    profile = make_profile(["w0", "w1"])
    results = _random_results(rng, 12)
    first = rerank(results, profile, scorer)
    by_id = {r.id: r for r in results}
    reordered = [by_id[s.result_id] for s in first]
    second = rerank(reordered, profile, scorer)
    assert [s.result_id for s in first] == [s.result_id for s in second]


def test_score_ordering_non_increasing(space_profile):
    rng = random.Random(3)
    results = _random_results(rng, 10) + [result(99, 11, "mars mars mars")]
    scored = rerank(results, space_profile, ScorerId.MATCH_MISMATCH)
    values = [s.score.value for s in scored]
    assert values == sorted(values, reverse=True)


def test_more_target_evidence_never_lowers_mm_score():
    """Appending an occurrence of an already-present target term (mismatch
    unchanged, corpus stats recomputed) cannot lower the mm score."""
    from interank.scoring import mm_score
    from conftest import doc_from_tokens

    rng = random.Random(17)
    profile = make_profile(["mars", "star"], competitors=["rover"])
    for _ in range(50):
        vocab = ["mars", "star", "rover", "dust", "rock"]
        tokens = ["mars"] + [rng.choice(vocab) for _ in range(rng.randint(0, 25))]
        before = mm_score(doc_from_tokens(tokens), profile).value
        after = mm_score(doc_from_tokens(tokens + ["mars"]), profile).value
        assert after >= before
