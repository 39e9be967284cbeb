"""Text pipeline: raw result text to normalized term statistics.

All scorers consume :class:`TermStats` built here, so tokenization rules
live in exactly one place: whitespace split, Unicode lowercase, strip of
leading/trailing non-alphanumeric characters, stopwords removed before any
counting. No stemming.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional


@dataclass(frozen=True)
class TermStats:
    """Per-document term statistics over the surviving (non-stopword) tokens.

    ``tokens`` keeps the surviving sequence in order so that multi-word
    profile entries can be counted as contiguous runs.
    """

    counts: dict[str, int]
    tokens: tuple[str, ...]
    total_tokens: int
    unique_terms: frozenset[str] = field(default_factory=frozenset)


def normalize_token(raw: str) -> Optional[str]:
    """Lowercase and strip edge punctuation; None when nothing survives.

    Internal separators (dots, hyphens, ...) are kept, so "WWW.NASA.GOV,"
    becomes "www.nasa.gov".
    """
    token = raw.lower()
    start, end = 0, len(token)
    while start < end and not token[start].isalnum():
        start += 1
    while end > start and not token[end - 1].isalnum():
        end -= 1
    return token[start:end] or None


def tokenize(text: str) -> list[str]:
    """Whitespace-split and normalize, dropping pieces that normalize away."""
    out = []
    for piece in text.split():
        term = normalize_token(piece)
        if term is not None:
            out.append(term)
    return out


def build_term_stats(tokens: Iterable[str], stopwords: frozenset[str] = frozenset()) -> TermStats:
    """Count tokens after stopword removal.

    ``total_tokens`` counts surviving tokens only, so the normalization
    divisor used by the scorers never includes stopwords.
    """
    surviving = tuple(t for t in tokens if t not in stopwords)
    counts = dict(Counter(surviving))
    return TermStats(
        counts=counts,
        tokens=surviving,
        total_tokens=len(surviving),
        unique_terms=frozenset(counts),
    )
