"""Metasearch re-ranking by interestingness against a domain-of-interest profile."""

from .connectors import ConnectorKind, ConnectorSpec, FetchPolicy, fixture_connector, load_connectors, record_fixture, search
from .profiles import DomainProfile, ProfileEntry, ProfileStore, Violation, parse_profile_file, parse_stopwords_file, validate_profile
from .rank_analysis import RankComparison, RankPairing, compare_orders, flag_outliers, kendall_tau, mean_displacement, pairing_from_positions
from .rerank import ScoredResult, SearchResult, rerank, scoring_text
from .scoring import CorpusStats, InterestingnessScore, ScorerId, build_corpus_stats, idf, match_count, mismatch_cardinality, mm_score, tfidf_score
from .text import TermStats, build_term_stats, normalize_token, tokenize

__version__ = "0.1.0"

__all__ = [
    "ConnectorKind",
    "ConnectorSpec",
    "CorpusStats",
    "DomainProfile",
    "FetchPolicy",
    "InterestingnessScore",
    "ProfileEntry",
    "ProfileStore",
    "RankComparison",
    "RankPairing",
    "ScoredResult",
    "ScorerId",
    "SearchResult",
    "TermStats",
    "Violation",
    "build_corpus_stats",
    "build_term_stats",
    "compare_orders",
    "fixture_connector",
    "flag_outliers",
    "idf",
    "kendall_tau",
    "load_connectors",
    "match_count",
    "mean_displacement",
    "mismatch_cardinality",
    "mm_score",
    "normalize_token",
    "pairing_from_positions",
    "parse_profile_file",
    "parse_stopwords_file",
    "record_fixture",
    "rerank",
    "scoring_text",
    "search",
    "tfidf_score",
    "tokenize",
    "validate_profile",
]
