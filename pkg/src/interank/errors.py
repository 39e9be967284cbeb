"""Error types shared across the package.

Every error carries a stable machine-readable ``code`` so the CLI and the
HTTP service can surface the same diagnostics.
"""
from __future__ import annotations


class InterankError(Exception):
    code = "error"


class MalformedLine(InterankError):
    """A profile/stopwords line that survives as nothing but stopwords."""

    code = "malformed_line"

    def __init__(self, line_no: int, line: str):
        self.line_no = line_no
        self.line = line
        super().__init__(f"line {line_no}: entry is only stopwords: {line!r}")


class UnknownProfile(InterankError):
    code = "unknown_profile"


class InvalidProfile(InterankError):
    code = "invalid_profile"

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class UnknownScorer(InterankError):
    code = "unknown_scorer"


class EmptyCorpus(InterankError):
    code = "empty_corpus"


class EmptyResultSet(InterankError):
    code = "empty_result_set"


class DegeneratePairing(InterankError):
    code = "degenerate_pairing"


class IdMismatch(InterankError):
    code = "id_mismatch"


class UnknownConnector(InterankError):
    code = "unknown_connector"


class ConnectorUnavailable(InterankError):
    code = "connector_unavailable"


class MalformedResponse(InterankError):
    code = "malformed_response"


class IoFailure(InterankError):
    code = "io_failure"
