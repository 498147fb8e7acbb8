"""HTTP review service wrapping a ReviewSession.

Endpoints (all JSON, all responses carry schema_version):

    GET  /api/v1/suggestions?status=&category=&lang=&page=&page_size=
    POST /api/v1/suggestions/{id}/decision   {action, replacement?, reviewer?}
    GET  /api/v1/progress
    GET  /api/v1/pairs/{pair_id}
    POST /api/v1/export                      {out?}
    GET  /api/v1/health

200 success, 400 validation, 404 unknown id, 500 log failure.
"""

from __future__ import annotations

import datetime
import tempfile
from pathlib import Path
from typing import Optional

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .review import ReviewSession, UnknownSuggestionError
from .rewrite import PlaceholderSuggestion, ReviewDecision, RewriteError

SCHEMA_VERSION = "1"


def _ok(payload: dict, status_code: int = 200) -> JSONResponse:
    return JSONResponse({"schema_version": SCHEMA_VERSION, **payload},
                        status_code=status_code)


def _error(status_code: int, message: str) -> JSONResponse:
    return JSONResponse(
        {"schema_version": SCHEMA_VERSION, "error": message},
        status_code=status_code)


def _suggestion_dict(session: ReviewSession, s: PlaceholderSuggestion) -> dict:
    pair = session.pair(s.pair_id)
    return {
        "suggestion_id": s.suggestion_id,
        "pair_id": s.pair_id,
        "side": s.side,
        "span": list(s.span),
        "surface": s.surface,
        "proposed_token": s.token.render(),
        "category": s.category.value,
        "paradigm_id": s.paradigm_id,
        "agreement_risk": s.agreement_risk,
        "status": s.status,
        "edited_text": s.edited_text,
        "context": {"en_text": pair.source.text, "ja_text": pair.target.text},
    }


class DecisionBody(BaseModel):
    action: str
    replacement: Optional[str] = None
    reviewer: Optional[str] = None


class ExportBody(BaseModel):
    out: Optional[str] = None


def create_app(session: ReviewSession,
               static_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="pronaudit review service")
    app.state.session = session

    @app.get("/api/v1/health")
    def health():
        return _ok({"status": "ok", "corpus_digest": session.corpus_digest})

    @app.get("/api/v1/progress")
    def progress():
        p = session.progress()
        return _ok({"pending": p.pending, "accepted": p.accepted,
                    "rejected": p.rejected, "edited": p.edited,
                    "total": p.total})

    @app.get("/api/v1/suggestions")
    def suggestions(status: Optional[str] = None,
                    category: Optional[str] = None,
                    lang: Optional[str] = None,
                    page: int = 1, page_size: int = 20):
        try:
            items, total = session.list_suggestions(
                status=status, category=category, language=lang,
                page=page, page_size=page_size)
        except ValueError as e:
            return _error(400, str(e))
        return _ok({
            "page": page,
            "page_size": page_size,
            "total": total,
            "items": [_suggestion_dict(session, s) for s in items],
        })

    @app.post("/api/v1/suggestions/{suggestion_id}/decision")
    def decide(suggestion_id: str, body: DecisionBody):
        try:
            decision = ReviewDecision(
                suggestion_id=suggestion_id,
                action=body.action,
                replacement=body.replacement,
                reviewer=body.reviewer or "",
                timestamp=datetime.datetime.now(datetime.timezone.utc)
                .isoformat(timespec="seconds"),
            )
        except RewriteError as e:
            return _error(400, str(e))
        try:
            updated = session.record_decision(decision)
        except UnknownSuggestionError:
            return _error(404, f"unknown suggestion {suggestion_id}")
        except RewriteError as e:
            return _error(400, str(e))
        except OSError as e:
            return _error(500, f"decision log write failed: {e}")
        return _ok({"suggestion": _suggestion_dict(session, updated)})

    @app.get("/api/v1/pairs/{pair_id}")
    def pair(pair_id: str):
        try:
            p = session.pair(pair_id)
        except UnknownSuggestionError:
            return _error(404, f"unknown pair {pair_id}")
        related = [_suggestion_dict(session, s)
                   for s in session.suggestions_for_pair(pair_id)]
        return _ok({
            "pair_id": p.pair_id,
            "en": {"id": p.source.id, "text": p.source.text},
            "ja": {"id": p.target.id, "text": p.target.text},
            "suggestions": related,
        })

    @app.post("/api/v1/export")
    def export(body: ExportBody):
        out = body.out or str(
            Path(tempfile.gettempdir()) / "pronaudit-export.tsv")
        try:
            path, errors = session.export_templated(out)
        except OSError as e:
            return _error(500, f"export failed: {e}")
        return _ok({"files": [str(path)], "errors": errors})

    if static_dir:
        app.mount("/", StaticFiles(directory=static_dir, html=True),
                  name="ui")
    return app
