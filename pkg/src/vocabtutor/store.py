"""File-backed session persistence: one JSON document per session.

Documents are replaced atomically (write to a temp file in the same
directory, fsync, then os.replace), so a crash mid-save leaves either
the old document or the new one, never a torn file.
"""
from __future__ import annotations

import os
import re
import secrets
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .serialize import dumps, loads
from .session import Presentation, SessionState


class UnknownSessionError(KeyError):
    """No session document for the given id."""


class CorruptSessionError(ValueError):
    """A session document exists but cannot be trusted."""


_SESSION_ID_RE = re.compile(r"^[A-Za-z0-9_-]{1,64}$")


def new_session_id() -> str:
    return secrets.token_hex(16)


@dataclass
class SessionEnvelope:
    """What the service persists per session.

    pending is the question that has been asked but not yet answered;
    answers are only accepted against it.
    """

    session_id: str
    created_at: str
    session: SessionState
    pending: Presentation | None = None

    def to_dict(self) -> dict:
        return {
            "session_id": self.session_id,
            "created_at": self.created_at,
            "session": self.session.to_dict(),
            "pending": self.pending.to_dict() if self.pending is not None else None,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SessionEnvelope":
        pending = data.get("pending")
        return cls(
            session_id=str(data["session_id"]),
            created_at=str(data["created_at"]),
            session=SessionState.from_dict(data["session"]),
            pending=Presentation.from_dict(pending) if pending is not None else None,
        )


def utc_now_iso() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class SessionStore:
    """One JSON file per session under a root directory."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()

    def lock(self, session_id: str) -> threading.Lock:
        """Per-session mutex; all load-mutate-save cycles go through it."""
        with self._registry_lock:
            return self._locks.setdefault(session_id, threading.Lock())

    def _path(self, session_id: str) -> Path:
        if not _SESSION_ID_RE.match(session_id):
            raise UnknownSessionError(session_id)
        return self.root / f"{session_id}.json"

    def exists(self, session_id: str) -> bool:
        try:
            return self._path(session_id).is_file()
        except UnknownSessionError:
            return False

    def list_ids(self) -> list[str]:
        return sorted(p.stem for p in self.root.glob("*.json"))

    def load(self, session_id: str) -> SessionEnvelope:
        path = self._path(session_id)
        try:
            raw = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            raise UnknownSessionError(session_id) from None
        try:
            data = loads(raw)
            envelope = SessionEnvelope.from_dict(data)
        except (ValueError, KeyError, TypeError) as exc:
            raise CorruptSessionError(f"session {session_id}: {exc}") from exc
        if envelope.session_id != session_id:
            raise CorruptSessionError(
                f"session {session_id}: document claims id {envelope.session_id!r}"
            )
        return envelope

    def save(self, envelope: SessionEnvelope) -> None:
        path = self._path(envelope.session_id)
        payload = dumps(envelope.to_dict()).encode("utf-8")
        tmp = path.with_name(f".{path.name}.{os.getpid()}.{threading.get_ident()}.tmp")
        try:
            with open(tmp, "wb") as handle:
                handle.write(payload)
                handle.flush()
                os.fsync(handle.fileno())
            os.replace(tmp, path)
        except OSError:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise
