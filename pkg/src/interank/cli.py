"""Batch command-line interface.

Subcommands: rerank, compare, profile validate, fixture record, serve.
Exit codes: 0 success, 1 validation, 2 usage, 3 I/O, 4 connector.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import connectors as conn
from .errors import (
    ConnectorUnavailable,
    DegeneratePairing,
    EmptyCorpus,
    EmptyResultSet,
    IdMismatch,
    InvalidProfile,
    IoFailure,
    MalformedLine,
    MalformedResponse,
    UnknownConnector,
    UnknownProfile,
    UnknownScorer,
)
from .profiles import ProfileStore, validate_profile
from .rank_analysis import compare_orders, comparison_csv, comparison_summary
from .rerank import rerank
from .reports import render_json, render_table_csv, rerank_payload, result_table_rows, scoring_mode
from .scoring import ScorerId


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="interank",
        description="Re-rank search results by interestingness against a domain profile.",
    )
    parser.add_argument("--profiles-dir", default="profiles", help="profile files directory")
    parser.add_argument("--stopwords", default=None, help="stopwords file (default: <profiles-dir>/stopwords)")
    parser.add_argument("--connectors-config", default=None, help="JSON connector configuration file")
    sub = parser.add_subparsers(dest="command", required=True)

    p_rerank = sub.add_parser("rerank", help="fetch results and write the reranked table")
    p_rerank.add_argument("source", help="fixture file path or configured connector name")
    p_rerank.add_argument("query")
    p_rerank.add_argument("--profile", required=True)
    p_rerank.add_argument("--scorer", default="mm", help="mm or tfidf (case-insensitive)")
    p_rerank.add_argument("--out", required=True, help="output directory for results.csv/results.json")
    p_rerank.add_argument("--max-results", type=int, default=100)
    p_rerank.add_argument("--fetch-bodies", action="store_true")

    p_compare = sub.add_parser("compare", help="rerank with two scorers and compare the orders")
    p_compare.add_argument("source", help="fixture file path or configured connector name")
    p_compare.add_argument("query")
    p_compare.add_argument("--profile", required=True)
    p_compare.add_argument("--scorer-a", default="mm")
    p_compare.add_argument("--scorer-b", default="tfidf")
    p_compare.add_argument("--out", required=True, help="output directory for pairing.csv/summary.json")
    p_compare.add_argument("--max-results", type=int, default=100)
    p_compare.add_argument("--top-k", type=int, default=None, help="compare only the top k of the first order")

    p_profile = sub.add_parser("profile", help="profile management")
    profile_sub = p_profile.add_subparsers(dest="profile_command", required=True)
    p_validate = profile_sub.add_parser("validate", help="check a stored profile's invariants")
    p_validate.add_argument("name")

    p_fixture = sub.add_parser("fixture", help="fixture corpus management")
    fixture_sub = p_fixture.add_subparsers(dest="fixture_command", required=True)
    p_record = fixture_sub.add_parser("record", help="freeze live results into a replayable corpus")
    p_record.add_argument("connector")
    p_record.add_argument("query")
    p_record.add_argument("--out", required=True, help="fixture file path")
    p_record.add_argument("--max-results", type=int, default=100)
    p_record.add_argument("--fetch-bodies", action="store_true")

    p_serve = sub.add_parser("serve", help="launch the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8080)

    return parser


def _store(args) -> ProfileStore:
    return ProfileStore(args.profiles_dir, args.stopwords)


def _registry(args) -> dict[str, conn.ConnectorSpec]:
    if args.connectors_config:
        return conn.load_connectors(args.connectors_config)
    return {}


def _resolve_source(source: str, registry: dict[str, conn.ConnectorSpec]) -> conn.ConnectorSpec:
    if source in registry:
        return registry[source]
    if Path(source).is_file():
        return conn.fixture_connector(source, name=Path(source).stem)
    raise UnknownConnector(f"{source!r} is neither a configured connector nor a fixture file")


def _write(path: Path, content: str) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from exc


def _cmd_rerank(args) -> int:
    scorer = ScorerId.parse(args.scorer)
    profile = _store(args).load(args.profile)
    spec = _resolve_source(args.source, _registry(args))
    policy = conn.FetchPolicy(max_results=args.max_results, fetch_bodies=args.fetch_bodies)
    results = conn.search(spec, args.query, policy)
    scored = rerank(results, profile, scorer)
    rows = result_table_rows(results, scored)
    payload = rerank_payload(rows, profile.name, scorer, scoring_mode(results))
    out = Path(args.out)
    _write(out / "results.json", render_json(payload))
    _write(out / "results.csv", render_table_csv(rows))
    print(f"wrote {out / 'results.json'} and {out / 'results.csv'} ({len(rows)} rows)")
    return 0


def _cmd_compare(args) -> int:
    scorer_a = ScorerId.parse(args.scorer_a)
    scorer_b = ScorerId.parse(args.scorer_b)
    profile = _store(args).load(args.profile)
    spec = _resolve_source(args.source, _registry(args))
    policy = conn.FetchPolicy(max_results=args.max_results)
    results = conn.search(spec, args.query, policy)
    scored_a = rerank(results, profile, scorer_a)
    scored_b = rerank(results, profile, scorer_b)
    comparison = compare_orders(scored_a, scored_b, top_k=args.top_k)
    summary = {
        "profile": profile.name,
        "scorer_a": scorer_a.value,
        "scorer_b": scorer_b.value,
        **comparison_summary(comparison),
    }
    out = Path(args.out)
    _write(out / "pairing.csv", comparison_csv(comparison))
    _write(out / "summary.json", render_json(summary))
    print(f"wrote {out / 'pairing.csv'} and {out / 'summary.json'} (tau={comparison.kendall_tau:.4f})")
    return 0


def _cmd_profile_validate(args) -> int:
    profile = _store(args).load(args.name)
    violations = validate_profile(profile)
    if violations:
        for violation in violations:
            print(str(violation), file=sys.stderr)
        return 1
    return 0


def _cmd_fixture_record(args) -> int:
    registry = _registry(args)
    if args.connector not in registry:
        raise UnknownConnector(f"no such connector: {args.connector}")
    policy = conn.FetchPolicy(max_results=args.max_results, fetch_bodies=args.fetch_bodies)
    results = conn.search(registry[args.connector], args.query, policy)
    conn.record_fixture(results, args.query, args.out, engine=args.connector)
    print(f"recorded {len(results)} results to {args.out}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(args.profiles_dir, args.connectors_config, args.stopwords)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "rerank": _cmd_rerank,
        "compare": _cmd_compare,
        "profile": _cmd_profile_validate,
        "fixture": _cmd_fixture_record,
        "serve": _cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except InvalidProfile as exc:
        for violation in exc.violations:
            print(str(violation), file=sys.stderr)
        return 1
    except (MalformedLine, DegeneratePairing, IdMismatch, EmptyResultSet, EmptyCorpus) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UnknownScorer, UnknownConnector, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UnknownProfile, IoFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ConnectorUnavailable, MalformedResponse) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
