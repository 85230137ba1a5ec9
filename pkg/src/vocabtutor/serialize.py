"""JSON rendering with full-precision floats.

Q values must survive a round trip exactly, so floats are rendered with 17
significant digits (%.16e) rather than the shortest-repr form the stdlib
encoder produces. Output is deterministic: dict keys keep insertion order,
which all callers already sort where it matters.
"""
from __future__ import annotations

import json
import math
from typing import Any


def dumps(value: Any) -> str:
    """Serialize to JSON text; floats carry 17 significant digits."""
    parts: list[str] = []
    _render(value, parts)
    return "".join(parts)


def _render(value: Any, out: list[str]) -> None:
    if value is None or isinstance(value, bool):
        out.append("null" if value is None else ("true" if value else "false"))
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"cannot serialize non-finite float {value!r}")
        out.append(format(value, ".16e"))
    elif isinstance(value, str):
        out.append(json.dumps(value))
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, item in enumerate(value):
            if i:
                out.append(", ")
            _render(item, out)
        out.append("]")
    elif isinstance(value, dict):
        out.append("{")
        for i, (key, item) in enumerate(value.items()):
            if i:
                out.append(", ")
            if not isinstance(key, str):
                raise TypeError(f"JSON object keys must be str, got {type(key).__name__}")
            out.append(json.dumps(key))
            out.append(": ")
            _render(item, out)
        out.append("}")
    else:
        raise TypeError(f"cannot serialize {type(value).__name__} to JSON")


def loads(text: str) -> Any:
    return json.loads(text)
