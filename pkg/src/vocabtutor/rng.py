"""Deterministic seeding helpers.

Every session owns exactly one random.Random stream. Per interaction the
draw order is fixed: level-action branch draw, tie-break draw (only when
more than one maximizer), word draw, then the simulated answer draw when a
simulated student is attached. Keeping the order fixed is what makes runs
byte-for-byte reproducible.
"""
from __future__ import annotations

import hashlib
import random

MAX_SEED = 2**64 - 1


def derive_seed(base_seed: int, *parts: str | int) -> int:
    """Derive a stable 64-bit sub-seed from a base seed and labels.

    Hash-based so that adding a student or run never shifts the streams of
    the others.
    """
    material = "|".join([str(int(base_seed)), *[str(p) for p in parts]])
    digest = hashlib.sha256(material.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def rng_state_to_jsonable(rng: random.Random) -> list:
    """Snapshot a Mersenne Twister state as plain JSON-friendly values."""
    version, internal, gauss_next = rng.getstate()
    return [version, list(internal), gauss_next]


def rng_from_jsonable(state: list) -> random.Random:
    rng = random.Random()
    version, internal, gauss_next = state
    rng.setstate((version, tuple(internal), gauss_next))
    return rng
