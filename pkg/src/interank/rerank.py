"""Re-rank a fetched result set by interestingness score."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyResultSet, InvalidProfile
from .profiles import DomainProfile, validate_profile
from .scoring import InterestingnessScore, ScorerId, score_all
from .text import build_term_stats, tokenize


@dataclass(frozen=True)
class SearchResult:
    """One backend result in its native position."""

    id: str
    engine_rank: int
    url: str
    title: str
    snippet: str
    body: str = ""


@dataclass(frozen=True)
class ScoredResult:
    result_id: str
    score: InterestingnessScore
    engine_rank: int
    new_rank: int


def scoring_text(result: SearchResult) -> str:
    """Title, snippet and body joined with single spaces, skipping empties."""
    return " ".join(part for part in (result.title, result.snippet, result.body) if part)


def rerank(
    results: Sequence[SearchResult],
    profile: DomainProfile,
    scorer: ScorerId,
) -> list[ScoredResult]:
    """Score every result and emit the new order, best first.

    Ties break by ascending native engine rank, so the output is fully
    deterministic. The returned list is a permutation of the input ids with
    new_rank running 1..n.
    """
    if not results:
        raise EmptyResultSet("nothing to rerank")
    ids = [r.id for r in results]
    if len(set(ids)) != len(ids):
        raise ValueError("result ids must be unique within one result set")
    violations = validate_profile(profile)
    if violations:
        raise InvalidProfile(violations)

    docs = [build_term_stats(tokenize(scoring_text(r)), profile.stopwords) for r in results]
    scores = score_all(docs, profile, scorer)

    order = sorted(range(len(results)), key=lambda i: (-scores[i].value, results[i].engine_rank))
    return [
        ScoredResult(
            result_id=results[i].id,
            score=scores[i],
            engine_rank=results[i].engine_rank,
            new_rank=new_rank,
        )
        for new_rank, i in enumerate(order, start=1)
    ]
