"""Interestingness scoring: Match-Mismatch and Tf-Idf behind one contract.

Both scorers compose a relevance signal with an unexpectedness signal:
Match-Mismatch multiplies target-term occurrences by how atypical the
document's term set is, penalized by competitor occurrences; Tf-Idf weights
target-term frequency by the rarity of each term across the result set.
Every score is divided by the document's surviving token count so results
of different sizes compare fairly.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyCorpus, UnknownScorer
from .profiles import DomainProfile, ProfileEntry
from .text import TermStats


class ScorerId(enum.Enum):
    MATCH_MISMATCH = "mm"
    TFIDF = "tfidf"

    @classmethod
    def parse(cls, name: str) -> "ScorerId":
        try:
            return cls(name.strip().lower())
        except ValueError:
            valid = ", ".join(s.value for s in cls)
            raise UnknownScorer(f"unknown scorer {name!r}; valid scorers: {valid}") from None


@dataclass(frozen=True)
class InterestingnessScore:
    value: float
    scorer: ScorerId

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"score must be finite, got {self.value!r}")


@dataclass(frozen=True)
class CorpusStats:
    """Document frequencies of the target entries over one result set."""

    n_results: int
    doc_freq: dict[ProfileEntry, int]


def entry_count(doc: TermStats, entry: ProfileEntry) -> int:
    """Occurrences of an entry in a document.

    Single-term entries read the term count directly; phrases are counted
    as contiguous, non-overlapping runs, scanned left to right.
    """
    if len(entry.terms) == 1:
        return doc.counts.get(entry.terms[0], 0)
    tokens = doc.tokens
    m = len(entry.terms)
    count = 0
    i = 0
    while i + m <= len(tokens):
        if tokens[i : i + m] == entry.terms:
            count += 1
            i += m
        else:
            i += 1
    return count


def match_count(doc: TermStats, target: frozenset[ProfileEntry]) -> int:
    """Total occurrences of target entries in the document."""
    return sum(entry_count(doc, e) for e in target)


def competitor_count(doc: TermStats, competitors: frozenset[ProfileEntry]) -> int:
    """Total occurrences of competitor entries; same counting rule as match."""
    return sum(entry_count(doc, e) for e in competitors)


def present_entries(doc: TermStats, target: frozenset[ProfileEntry]) -> frozenset[ProfileEntry]:
    """The document's entry set: its unique terms plus target phrases it contains."""
    present = {ProfileEntry((t,)) for t in doc.unique_terms}
    for e in target:
        if len(e.terms) > 1 and entry_count(doc, e) > 0:
            present.add(e)
    return frozenset(present)


def mismatch_cardinality(doc: TermStats, target: frozenset[ProfileEntry]) -> int:
    """Size of the symmetric difference between target set and document set."""
    return len(target ^ present_entries(doc, target))


def mm_score(doc: TermStats, profile: DomainProfile) -> InterestingnessScore:
    """(match * mismatch - competitors) / token count; 0 for an empty document."""
    if doc.total_tokens == 0:
        return InterestingnessScore(0.0, ScorerId.MATCH_MISMATCH)
    match = match_count(doc, profile.target)
    mismatch = mismatch_cardinality(doc, profile.target)
    comp = competitor_count(doc, profile.competitors)
    value = (match * mismatch - comp) / doc.total_tokens
    return InterestingnessScore(value, ScorerId.MATCH_MISMATCH)


def build_corpus_stats(docs: Sequence[TermStats], target: frozenset[ProfileEntry]) -> CorpusStats:
    """Per-entry document frequencies over the result set being scored."""
    if not docs:
        raise EmptyCorpus("corpus statistics need at least one document")
    doc_freq = {e: sum(1 for d in docs if entry_count(d, e) > 0) for e in target}
    return CorpusStats(n_results=len(docs), doc_freq=doc_freq)


def idf(entry: ProfileEntry, cs: CorpusStats) -> float:
    """Natural log of n_results/df; an entry appearing nowhere gets 0."""
    df = cs.doc_freq.get(entry, 0)
    if df == 0:
        return 0.0
    return math.log(cs.n_results / df)


def tfidf_score(doc: TermStats, profile: DomainProfile, cs: CorpusStats) -> InterestingnessScore:
    """Sum of per-entry tf * idf, divided by token count; 0 for an empty document.

    Entries are visited in sorted order so the float accumulation is
    bit-reproducible regardless of how the target set was built.
    """
    if doc.total_tokens == 0:
        return InterestingnessScore(0.0, ScorerId.TFIDF)
    acc = 0.0
    for entry in sorted(profile.target):
        acc += entry_count(doc, entry) * idf(entry, cs)
    return InterestingnessScore(acc / doc.total_tokens, ScorerId.TFIDF)


def score_all(docs: Sequence[TermStats], profile: DomainProfile, scorer: ScorerId) -> list[InterestingnessScore]:
    """Score every document of one result set with the chosen scorer."""
    if scorer is ScorerId.MATCH_MISMATCH:
        return [mm_score(doc, profile) for doc in docs]
    cs = build_corpus_stats(docs, profile.target)
    return [tfidf_score(doc, profile, cs) for doc in docs]
