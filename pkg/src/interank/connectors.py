"""Search backends: a replayable fixture connector and a generic HTTP one.

Live engines are reached through a single template connector configured
per engine (URL template, JSON field paths, credential env var) rather
than per-engine code. Fixtures freeze a result set as line-delimited JSON
so experiments replay bit-exactly.
"""
from __future__ import annotations

import enum
import hashlib
import json
import os
import threading
import time
from dataclasses import dataclass, field
from html.parser import HTMLParser
from pathlib import Path
from typing import Any
from urllib.parse import quote_plus, urlsplit

import requests

from .errors import ConnectorUnavailable, IoFailure, MalformedResponse
from .rerank import SearchResult


class ConnectorKind(enum.Enum):
    FIXTURE = "fixture"
    HTTP_TEMPLATE = "http_template"


@dataclass(frozen=True)
class ConnectorSpec:
    name: str
    kind: ConnectorKind
    parameters: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind is ConnectorKind.FIXTURE:
            if not self.parameters.get("path"):
                raise ValueError(f"fixture connector {self.name!r} needs a corpus 'path'")
        else:
            template = self.parameters.get("url_template", "")
            if "{query}" not in template:
                raise ValueError(
                    f"http connector {self.name!r} needs a 'url_template' containing {{query}}"
                )


@dataclass(frozen=True)
class FetchPolicy:
    max_results: int = 100
    fetch_bodies: bool = False
    timeout: float = 10.0
    rate_limit: float = 2.0  # requests per second per host

    def __post_init__(self):
        if self.max_results < 1:
            raise ValueError("max_results must be >= 1")


def result_id_for_url(url: str) -> str:
    """Deterministic id from the scheme-normalized URL."""
    parts = urlsplit(url.strip())
    scheme = parts.scheme.lower()
    netloc = parts.netloc.lower()
    for default in (":80", ":443"):
        if netloc.endswith(default):
            netloc = netloc[: -len(default)]
    normalized = f"{scheme}://{netloc}{parts.path or '/'}"
    if parts.query:
        normalized += f"?{parts.query}"
    return hashlib.sha1(normalized.encode("utf-8")).hexdigest()[:16]


class _RateLimiter:
    """Minimum spacing between requests, tracked per host."""

    def __init__(self):
        self._lock = threading.Lock()
        self._next_allowed: dict[str, float] = {}

    def wait(self, host: str, rate_limit: float) -> None:
        if rate_limit <= 0:
            return
        interval = 1.0 / rate_limit
        with self._lock:
            now = time.monotonic()
            allowed = self._next_allowed.get(host, now)
            self._next_allowed[host] = max(allowed, now) + interval
        delay = allowed - now
        if delay > 0:
            time.sleep(delay)


_rate_limiter = _RateLimiter()


class _TextExtractor(HTMLParser):
    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.pieces: list[str] = []
        self._skip_depth = 0

    def handle_starttag(self, tag, attrs):
        if tag in ("script", "style"):
            self._skip_depth += 1
        self.pieces.append(" ")

    def handle_endtag(self, tag):
        if tag in ("script", "style") and self._skip_depth > 0:
            self._skip_depth -= 1
        self.pieces.append(" ")

    def handle_data(self, data):
        if self._skip_depth == 0:
            self.pieces.append(data)


def extract_text(html: str) -> str:
    """Strip markup and script/style content, decode entities, collapse spaces."""
    parser = _TextExtractor()
    parser.feed(html)
    parser.close()
    return " ".join("".join(parser.pieces).split())


def record_fixture(
    results: list[SearchResult],
    query: str,
    path: str | Path,
    engine: str = "fixture",
    recorded_at: str | None = None,
) -> None:
    """Write a replayable corpus file; replaces any existing file atomically."""
    if recorded_at is None:
        recorded_at = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    path = Path(path)
    lines = [json.dumps({"query": query, "engine": engine, "recorded_at": recorded_at})]
    for r in results:
        lines.append(
            json.dumps(
                {
                    "id": r.id,
                    "rank": r.engine_rank,
                    "url": r.url,
                    "title": r.title,
                    "snippet": r.snippet,
                    "body": r.body,
                }
            )
        )
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_text("\n".join(lines) + "\n", encoding="utf-8")
        os.replace(tmp, path)
    except OSError as exc:
        raise IoFailure(f"cannot write fixture {path}: {exc}") from exc


def load_fixture(path: str | Path) -> tuple[dict, list[SearchResult]]:
    """Read a corpus file back into its header and results."""
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConnectorUnavailable(f"cannot read fixture {path}: {exc}") from exc
    lines = [line for line in raw.splitlines() if line.strip()]
    if not lines:
        raise MalformedResponse(f"fixture {path} is empty (missing header line)")
    try:
        header = json.loads(lines[0])
        rows = [json.loads(line) for line in lines[1:]]
    except json.JSONDecodeError as exc:
        raise MalformedResponse(f"fixture {path} is not line-delimited JSON: {exc}") from exc
    results = []
    for row in rows:
        try:
            results.append(
                SearchResult(
                    id=row["id"],
                    engine_rank=row["rank"],
                    url=row["url"],
                    title=row["title"],
                    snippet=row["snippet"],
                    body=row.get("body", ""),
                )
            )
        except KeyError as exc:
            raise MalformedResponse(f"fixture {path}: record missing field {exc}") from exc
    return header, results


def _walk_path(payload: Any, dotted: str):
    value = payload
    for key in dotted.split("."):
        if isinstance(value, dict) and key in value:
            value = value[key]
        else:
            raise MalformedResponse(f"response is missing field path {dotted!r}")
    return value


def _http_search(spec: ConnectorSpec, query: str, policy: FetchPolicy) -> list[SearchResult]:
    params = spec.parameters
    url = params["url_template"].replace("{query}", quote_plus(query))
    headers = dict(params.get("headers", {}))

    credential_env = params.get("credential_env")
    if "{credential}" in url or any("{credential}" in v for v in headers.values()):
        if not credential_env:
            raise ConnectorUnavailable(f"connector {spec.name!r} uses a credential but names no env var")
        credential = os.environ.get(credential_env)
        if not credential:
            raise ConnectorUnavailable(f"credential env var {credential_env} is not set")
        url = url.replace("{credential}", credential)
        headers = {k: v.replace("{credential}", credential) for k, v in headers.items()}

    _rate_limiter.wait(urlsplit(url).netloc, params.get("rate_limit", policy.rate_limit))
    try:
        response = requests.get(url, headers=headers, timeout=policy.timeout)
    except requests.RequestException as exc:
        raise ConnectorUnavailable(f"connector {spec.name!r}: {exc}") from exc
    if response.status_code >= 400:
        raise ConnectorUnavailable(f"connector {spec.name!r}: HTTP {response.status_code}")
    try:
        payload = response.json()
    except ValueError as exc:
        raise MalformedResponse(f"connector {spec.name!r}: response is not JSON") from exc

    items = _walk_path(payload, params.get("results_path", "results"))
    if not isinstance(items, list):
        raise MalformedResponse(f"field path {params.get('results_path', 'results')!r} is not a list")

    fields = params.get("fields", {"url": "url", "title": "title", "snippet": "snippet"})
    results = []
    for rank, item in enumerate(items[: policy.max_results], start=1):
        url_value = _walk_path(item, fields["url"])
        title = _walk_path(item, fields["title"]) if "title" in fields else ""
        snippet = _walk_path(item, fields["snippet"]) if "snippet" in fields else ""
        results.append(
            SearchResult(
                id=result_id_for_url(str(url_value)),
                engine_rank=rank,
                url=str(url_value),
                title=str(title),
                snippet=str(snippet),
            )
        )
    return results


def _fetch_body(url: str, policy: FetchPolicy) -> str:
    # Best effort: a dead result page must not sink the whole search.
    _rate_limiter.wait(urlsplit(url).netloc, policy.rate_limit)
    try:
        response = requests.get(url, timeout=policy.timeout)
        if response.status_code >= 400:
            return ""
        return extract_text(response.text)
    except requests.RequestException:
        return ""


def search(spec: ConnectorSpec, query: str, policy: FetchPolicy = FetchPolicy()) -> list[SearchResult]:
    """Run one query against a connector; results carry 1-based engine ranks."""
    if not query.strip():
        raise ValueError("query must be non-empty")
    if spec.kind is ConnectorKind.FIXTURE:
        _, results = load_fixture(spec.parameters["path"])
        return results[: policy.max_results]
    results = _http_search(spec, query, policy)
    if policy.fetch_bodies:
        results = [
            SearchResult(
                id=r.id,
                engine_rank=r.engine_rank,
                url=r.url,
                title=r.title,
                snippet=r.snippet,
                body=_fetch_body(r.url, policy),
            )
            for r in results
        ]
    return results


def load_connectors(config_path: str | Path) -> dict[str, ConnectorSpec]:
    """Read the JSON connector map; fixture paths resolve against the config dir."""
    config_path = Path(config_path)
    try:
        raw = json.loads(config_path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise IoFailure(f"cannot read connector config {config_path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"connector config {config_path} is not valid JSON: {exc}") from exc

    specs = {}
    for name, params in raw.items():
        params = dict(params)
        kind = ConnectorKind(params.pop("kind", "fixture"))
        if kind is ConnectorKind.FIXTURE and "path" in params:
            params["path"] = str((config_path.parent / params["path"]).resolve())
        specs[name] = ConnectorSpec(name=name, kind=kind, parameters=params)
    return specs


def fixture_connector(path: str | Path, name: str = "fixture") -> ConnectorSpec:
    """Convenience spec for replaying one corpus file."""
    return ConnectorSpec(name=name, kind=ConnectorKind.FIXTURE, parameters={"path": str(path)})
