"""HTTP face of the tutor: JSON endpoints under /v1, one session per file.

Every session operation is a load-mutate-save cycle under that session's
lock, and the new document hits disk before the response leaves, so a
restart never forgets an answered question.
"""
from __future__ import annotations

import secrets
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .content import Lexicon, UnknownWordError, validate_answer
from .session import PresentationMismatchError, Presentation, SessionState
from .store import (
    CorruptSessionError,
    SessionEnvelope,
    SessionStore,
    UnknownSessionError,
    new_session_id,
    utc_now_iso,
)

MAX_SEED = 2**64 - 1


class CreateSessionRequest(BaseModel):
    student_label: str | None = Field(default=None, max_length=128)
    seed: int | None = Field(default=None, ge=0, le=MAX_SEED)


class AnswerRequest(BaseModel):
    question_id: str = Field(max_length=64)
    text: str = Field(max_length=512)


def question_id_for(presentation: Presentation) -> str:
    return f"q-{presentation.index:06d}"


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"code": code, "message": message})


def create_app(
    lexicon: Lexicon,
    data_dir: str | Path,
    static_dir: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="vocabtutor", docs_url=None, redoc_url=None, openapi_url=None)
    store = SessionStore(data_dir)
    app.state.store = store
    app.state.lexicon = lexicon

    def unknown_session(request: Request, exc: UnknownSessionError) -> JSONResponse:
        return _error(404, "unknown_session", "no such session")

    def corrupt_session(request: Request, exc: CorruptSessionError) -> JSONResponse:
        return _error(500, "corrupt_session", str(exc))

    def storage_failure(request: Request, exc: OSError) -> JSONResponse:
        return _error(500, "storage_failure", f"session storage failed: {exc}")

    def stale_presentation(request: Request, exc: PresentationMismatchError) -> JSONResponse:
        return _error(409, "stale_question", str(exc))

    def content_mismatch(request: Request, exc: UnknownWordError) -> JSONResponse:
        return _error(500, "content_mismatch", "session references a word not in the lexicon")

    def invalid_request(request: Request, exc: RequestValidationError) -> JSONResponse:
        return _error(422, "invalid_request", str(exc.errors()))

    app.add_exception_handler(UnknownSessionError, unknown_session)
    app.add_exception_handler(CorruptSessionError, corrupt_session)
    app.add_exception_handler(OSError, storage_failure)
    app.add_exception_handler(PresentationMismatchError, stale_presentation)
    app.add_exception_handler(UnknownWordError, content_mismatch)
    app.add_exception_handler(RequestValidationError, invalid_request)

    @app.post("/v1/sessions", status_code=201)
    def create_session(request: CreateSessionRequest) -> dict:
        session_id = new_session_id()
        seed = request.seed if request.seed is not None else secrets.randbits(64)
        label = (request.student_label or "").strip() or "anonymous"
        envelope = SessionEnvelope(
            session_id=session_id,
            created_at=utc_now_iso(),
            session=SessionState(student_id=label, seed=seed),
        )
        with store.lock(session_id):
            store.save(envelope)
        return {"session_id": session_id, "seed": seed, "created_at": envelope.created_at}

    @app.get("/v1/sessions/{session_id}/next")
    def get_next(session_id: str) -> dict:
        with store.lock(session_id):
            envelope = store.load(session_id)
            if envelope.pending is None:
                envelope.pending = envelope.session.next_item(lexicon)
                store.save(envelope)
            pending = envelope.pending
        return {
            "question_id": question_id_for(pending),
            "image_ref": lexicon[pending.word].image_ref,
            "level_label": pending.level_after.label,
        }

    @app.post("/v1/sessions/{session_id}/answer")
    def submit_answer(session_id: str, request: AnswerRequest):
        with store.lock(session_id):
            envelope = store.load(session_id)
            pending = envelope.pending
            if pending is None or request.question_id != question_id_for(pending):
                return _error(409, "stale_question", "no pending question with that id")
            item = lexicon[pending.word]
            correct = validate_answer(request.text, item)
            record = envelope.session.record_outcome(pending, correct)
            envelope.pending = None
            store.save(envelope)
            body = {
                "correct": correct,
                "accepted_answers_shown": not correct,
                "level_label": envelope.session.current_level.label,
                "cumulative_reward": envelope.session.cumulative_reward,
                "interaction_index": record.index,
            }
            if not correct:
                body["target_word"] = item.word
                body["accepted_answers"] = sorted({item.word} | set(item.synonyms))
        return body

    @app.get("/v1/sessions/{session_id}/history")
    def get_history(session_id: str) -> dict:
        with store.lock(session_id):
            envelope = store.load(session_id)
        session = envelope.session
        return {
            "current_level": session.current_level.label,
            "cumulative_reward": session.cumulative_reward,
            "records": [record.to_dict() for record in session.history],
        }

    @app.get("/v1/healthz")
    def healthz() -> dict:
        return {"status": "ok", "words": len(lexicon)}

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="static")

    return app
