"""Result-table rendering shared by the CLI and the HTTP service.

Both surfaces must emit identical tables for identical inputs, so the row
construction and the serializations live here and nowhere else.
"""
from __future__ import annotations

import io
import csv
import json
from typing import Sequence

from .rerank import ScoredResult, SearchResult
from .scoring import ScorerId

CSV_COLUMNS = ["new_rank", "engine_rank", "score", "url", "title", "snippet"]


def scoring_mode(results: Sequence[SearchResult]) -> str:
    return "full_body" if any(r.body for r in results) else "snippet_only"


def result_table_rows(results: Sequence[SearchResult], scored: Sequence[ScoredResult]) -> list[dict]:
    """One row per result, ordered by new_rank, carrying both rank columns."""
    by_id = {r.id: r for r in results}
    rows = []
    for s in sorted(scored, key=lambda s: s.new_rank):
        r = by_id[s.result_id]
        rows.append(
            {
                "new_rank": s.new_rank,
                "engine_rank": s.engine_rank,
                "score": s.score.value,
                "url": r.url,
                "title": r.title,
                "snippet": r.snippet,
            }
        )
    return rows


def rerank_payload(
    rows: list[dict],
    profile_name: str,
    scorer: ScorerId,
    mode: str,
) -> dict:
    return {
        "results": rows,
        "scoring_mode": mode,
        "profile": profile_name,
        "scorer": scorer.value,
    }


def render_json(payload) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def render_table_csv(rows: list[dict]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([row[col] for col in CSV_COLUMNS])
    return out.getvalue()
