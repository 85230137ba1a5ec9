"""Simulated students answering vocabulary questions.

A student is a point on the CEFR scale plus a Gompertz-shaped success curve:

    P(correct | item, student) = 1 - exp(-b * exp(-c * (l_item - l_student)))

With the default b = ln 4 a student facing an item exactly at their own level
passes 75% of the time; far easier items approach certainty and far harder
ones approach (but never reach) zero. The curve is asymmetric on purpose:
being over-levelled hurts more than being under-levelled helps.
"""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from pathlib import Path

try:
    import tomllib
except ImportError:  # python 3.10
    import tomli as tomllib

from .domain import LEVEL_MAX, LEVEL_MIN

DEFAULT_B = math.log(4.0)
DEFAULT_C = 1.0


@dataclass(frozen=True)
class SimulatedStudent:
    label: str
    proficiency: float
    b: float = DEFAULT_B
    c: float = DEFAULT_C

    def __post_init__(self) -> None:
        if not (int(LEVEL_MIN) <= self.proficiency <= int(LEVEL_MAX) + 1):
            raise ValueError(
                f"proficiency must lie on the level scale [0, 6], got {self.proficiency}"
            )
        if self.b <= 0:
            raise ValueError(f"b must be positive, got {self.b}")
        if self.c <= 0:
            raise ValueError(f"c must be positive, got {self.c}")

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "proficiency": self.proficiency,
            "b": self.b,
            "c": self.c,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SimulatedStudent":
        return cls(
            label=str(data["label"]),
            proficiency=float(data["proficiency"]),
            b=float(data.get("b", DEFAULT_B)),
            c=float(data.get("c", DEFAULT_C)),
        )


def default_students() -> list[SimulatedStudent]:
    return [
        SimulatedStudent("beginner", 0.5),
        SimulatedStudent("intermediate", 2.5),
        SimulatedStudent("advanced", 4.5),
    ]


# The mathematical curve never reaches 0 or 1, but float64 saturates once the
# inner exponent passes ~37. Nudging off the endpoints keeps every Bernoulli
# draw two-sided, which is what the model promises.
_P_FLOOR = 2.0**-1074
_P_CEIL = 1.0 - 2.0**-53


def success_probability(student: SimulatedStudent, item_level: float) -> float:
    """Chance the student answers an item of the given level correctly."""
    gap = float(item_level) - student.proficiency
    p = -math.expm1(-student.b * math.exp(-student.c * gap))
    return min(max(p, _P_FLOOR), _P_CEIL)


def simulate_answer(
    student: SimulatedStudent, item_level: float, rng: random.Random
) -> bool:
    """One Bernoulli draw from the session stream."""
    return rng.random() < success_probability(student, item_level)


def load_student_profiles(path: str | Path) -> list[SimulatedStudent]:
    """Read student profiles from a JSON or TOML file.

    JSON: a list of {label, proficiency, b?, c?} objects.
    TOML: repeated [[students]] tables with the same keys.
    """
    path = Path(path)
    if path.suffix.lower() == ".toml":
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
        raw = data.get("students", [])
    else:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        raw = data if isinstance(data, list) else data.get("students", [])
    students = [SimulatedStudent.from_dict(entry) for entry in raw]
    if not students:
        raise ValueError(f"no student profiles found in {path}")
    labels = [s.label for s in students]
    if len(set(labels)) != len(labels):
        raise ValueError(f"duplicate student labels in {path}")
    return students
