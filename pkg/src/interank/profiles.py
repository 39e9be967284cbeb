"""Domain-of-interest profiles: target terms, competitor terms, stopwords.

A profile is persisted as plain line-per-entry text files in a profiles
directory (``<name>.target``, ``<name>.competitor``) next to one global
``stopwords`` file, all sharing the same grammar: UTF-8, one entry per
line, ``#`` comment lines, blank lines ignored.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass
from pathlib import Path

from .errors import MalformedLine, UnknownProfile
from .text import tokenize

_NAME_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9._-]*$")


@dataclass(frozen=True, order=True)
class ProfileEntry:
    """One normalized profile entry; more than one term means a contiguous phrase."""

    terms: tuple[str, ...]

    @property
    def text(self) -> str:
        return " ".join(self.terms)

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class Violation:
    code: str
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.code}({self.detail})" if self.detail else self.code


@dataclass(frozen=True)
class DomainProfile:
    name: str
    target: frozenset[ProfileEntry]
    competitors: frozenset[ProfileEntry]
    stopwords: frozenset[str] = frozenset()


def parse_profile_file(content: str, stopwords: frozenset[str] = frozenset()) -> frozenset[ProfileEntry]:
    """One entry per non-comment, non-blank line, normalized and deduplicated.

    Lines that normalize to nothing are dropped; a line that survives
    normalization but consists only of stopwords raises MalformedLine with
    its line number.
    """
    entries = set()
    for line_no, line in enumerate(content.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = tokenize(stripped)
        if not tokens:
            continue
        kept = tuple(t for t in tokens if t not in stopwords)
        if not kept:
            raise MalformedLine(line_no, stripped)
        entries.add(ProfileEntry(kept))
    return frozenset(entries)


def parse_stopwords_file(content: str) -> frozenset[str]:
    """Same grammar as profile files; every token on a kept line is a stopword."""
    words = set()
    for line in content.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        words.update(tokenize(stripped))
    return frozenset(words)


def serialize_entries(entries: frozenset[ProfileEntry]) -> str:
    """Stable one-entry-per-line form; reparses to an identical entry set."""
    return "".join(f"{entry.text}\n" for entry in sorted(entries))


def validate_profile(profile: DomainProfile) -> list[Violation]:
    """Empty list iff the profile invariants hold; violations are data."""
    violations = []
    if not profile.target:
        violations.append(Violation("EmptyTarget"))
    for entry in sorted(profile.target & profile.competitors):
        violations.append(Violation("OverlapViolation", entry.text))
    for entry in sorted(profile.target | profile.competitors):
        if any(t in profile.stopwords for t in entry.terms):
            violations.append(Violation("StopwordEntry", entry.text))
    return violations


class ProfileStore:
    """File-backed profile storage keyed by profile name.

    Reads are uncoordinated; writes go through a temp file and an atomic
    rename, so concurrent writers are last-writer-wins per file.
    """

    def __init__(self, root: str | Path, stopwords_path: str | Path | None = None):
        self.root = Path(root)
        self.stopwords_path = Path(stopwords_path) if stopwords_path else self.root / "stopwords"

    def _path(self, name: str, kind: str) -> Path:
        if not _NAME_RE.match(name):
            raise ValueError(f"invalid profile name: {name!r}")
        return self.root / f"{name}.{kind}"

    def stopwords(self) -> frozenset[str]:
        if not self.stopwords_path.exists():
            return frozenset()
        return parse_stopwords_file(self.stopwords_path.read_text(encoding="utf-8"))

    def list_names(self) -> list[str]:
        if not self.root.is_dir():
            return []
        return sorted(p.name[: -len(".target")] for p in self.root.glob("*.target"))

    def exists(self, name: str) -> bool:
        return self._path(name, "target").exists()

    def load(self, name: str) -> DomainProfile:
        target_path = self._path(name, "target")
        if not target_path.exists():
            raise UnknownProfile(f"no such profile: {name}")
        stopwords = self.stopwords()
        target = parse_profile_file(target_path.read_text(encoding="utf-8"), stopwords)
        competitor_path = self._path(name, "competitor")
        competitors = frozenset()
        if competitor_path.exists():
            competitors = parse_profile_file(competitor_path.read_text(encoding="utf-8"), stopwords)
        return DomainProfile(name=name, target=target, competitors=competitors, stopwords=stopwords)

    def save(self, profile: DomainProfile) -> None:
        self.root.mkdir(parents=True, exist_ok=True)
        self._write(self._path(profile.name, "target"), serialize_entries(profile.target))
        self._write(self._path(profile.name, "competitor"), serialize_entries(profile.competitors))

    @staticmethod
    def _write(path: Path, content: str) -> None:
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_text(content, encoding="utf-8")
        os.replace(tmp, path)
