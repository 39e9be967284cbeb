"""HTTP facade: search-and-rerank, scorer comparison, profile management.

All bodies are JSON. Error responses always carry a stable machine-readable
``code`` plus a human message; profile validation failures additionally
carry the violation list.
"""
from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import connectors as conn
from .errors import InterankError, InvalidProfile, UnknownConnector
from .profiles import DomainProfile, ProfileStore, parse_profile_file, validate_profile
from .rank_analysis import compare_orders, comparison_summary
from .rerank import rerank
from .reports import rerank_payload, result_table_rows, scoring_mode
from .scoring import ScorerId

_STATUS_BY_CODE = {
    "unknown_profile": 404,
    "unknown_connector": 404,
    "unknown_scorer": 400,
    "degenerate_pairing": 400,
    "invalid_profile": 422,
    "malformed_line": 422,
    "connector_unavailable": 502,
    "malformed_response": 502,
    "empty_result_set": 502,
    "empty_corpus": 502,
}


class RerankRequest(BaseModel):
    connector: str
    query: str = Field(min_length=1)
    profile: str
    scorer: str = "mm"
    max_results: int = Field(default=100, ge=1)
    fetch_bodies: bool = False


class CompareRequest(BaseModel):
    connector: str
    query: str = Field(min_length=1)
    profile: str
    scorer_a: str = "mm"
    scorer_b: str = "tfidf"
    max_results: int = Field(default=100, ge=1)
    fetch_bodies: bool = False


class ProfileBody(BaseModel):
    target: list[str]
    competitors: list[str] = []


def _profile_repr(profile: DomainProfile) -> dict:
    return {
        "name": profile.name,
        "target": sorted(e.text for e in profile.target),
        "competitors": sorted(e.text for e in profile.competitors),
    }


def create_app(
    profiles_dir: str | Path,
    connectors_config: str | Path | None = None,
    stopwords_path: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="interank", version="0.1.0")
    # the web console is served as static files from elsewhere
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"])
    store = ProfileStore(profiles_dir, stopwords_path)
    registry = conn.load_connectors(connectors_config) if connectors_config else {}

    @app.exception_handler(InterankError)
    async def _interank_error(request: Request, exc: InterankError):
        body = {"code": exc.code, "message": str(exc)}
        if isinstance(exc, InvalidProfile):
            body["violations"] = [{"code": v.code, "detail": v.detail} for v in exc.violations]
        return JSONResponse(status_code=_STATUS_BY_CODE.get(exc.code, 500), content=body)

    @app.exception_handler(RequestValidationError)
    async def _request_error(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"code": "invalid_request", "message": str(exc.errors())},
        )

    @app.exception_handler(ValueError)
    async def _value_error(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"code": "invalid_request", "message": str(exc)})

    def _connector(name: str) -> conn.ConnectorSpec:
        if name not in registry:
            raise UnknownConnector(f"no such connector: {name}")
        return registry[name]

    def _fetch(req: RerankRequest | CompareRequest):
        spec = _connector(req.connector)
        profile = store.load(req.profile)
        policy = conn.FetchPolicy(max_results=req.max_results, fetch_bodies=req.fetch_bodies)
        results = conn.search(spec, req.query, policy)
        return profile, results

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.get("/api/connectors")
    def list_connectors():
        return [
            {"name": spec.name, "kind": spec.kind.value}
            for spec in sorted(registry.values(), key=lambda s: s.name)
        ]

    @app.get("/api/profiles")
    def list_profiles():
        out = []
        for name in store.list_names():
            profile = store.load(name)
            out.append(
                {
                    "name": name,
                    "target_size": len(profile.target),
                    "competitor_size": len(profile.competitors),
                }
            )
        return out

    @app.get("/api/profiles/{name}")
    def get_profile(name: str):
        return _profile_repr(store.load(name))

    @app.put("/api/profiles/{name}")
    def put_profile(name: str, body: ProfileBody):
        stopwords = store.stopwords()
        profile = DomainProfile(
            name=name,
            target=parse_profile_file("\n".join(body.target), stopwords),
            competitors=parse_profile_file("\n".join(body.competitors), stopwords),
            stopwords=stopwords,
        )
        violations = validate_profile(profile)
        if violations:
            raise InvalidProfile(violations)
        store.save(profile)
        return _profile_repr(profile)

    @app.get("/api/profiles/{name}/validate")
    def validate_stored_profile(name: str):
        profile = store.load(name)
        return {
            "name": name,
            "violations": [{"code": v.code, "detail": v.detail} for v in validate_profile(profile)],
        }

    @app.post("/api/rerank")
    def handle_rerank(req: RerankRequest):
        scorer = ScorerId.parse(req.scorer)
        profile, results = _fetch(req)
        scored = rerank(results, profile, scorer)
        rows = result_table_rows(results, scored)
        return rerank_payload(rows, profile.name, scorer, scoring_mode(results))

    @app.post("/api/compare")
    def handle_compare(req: CompareRequest):
        scorer_a = ScorerId.parse(req.scorer_a)
        scorer_b = ScorerId.parse(req.scorer_b)
        profile, results = _fetch(req)
        scored_a = rerank(results, profile, scorer_a)
        scored_b = rerank(results, profile, scorer_b)
        comparison = compare_orders(scored_a, scored_b)
        mode = scoring_mode(results)
        return {
            "profile": profile.name,
            "scoring_mode": mode,
            "order_a": rerank_payload(result_table_rows(results, scored_a), profile.name, scorer_a, mode),
            "order_b": rerank_payload(result_table_rows(results, scored_b), profile.name, scorer_b, mode),
            "comparison": comparison_summary(comparison),
        }

    return app
