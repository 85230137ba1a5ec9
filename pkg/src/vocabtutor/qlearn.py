"""Tabular Q-learning: value table, update rule and action selection.

The update is the classic one-step rule

    Q(s,a) <- Q(s,a) + alpha * (r + gamma * max_a' Q(s',a') - Q(s,a))

Action selection follows the tutor's convention for epsilon: epsilon is the
probability of acting GREEDILY; with probability 1-epsilon a uniform random
action is taken. epsilon=1.0 therefore means "never explore", which the word
models rely on so that words cannot fall out of rotation by chance.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from typing import Hashable, Iterable

State = Hashable
Action = Enum


class CorruptTableError(ValueError):
    """A Q value was non-finite; the table can no longer be trusted."""


@dataclass(frozen=True)
class LearningParams:
    """Update/selection knobs for one Q model."""

    alpha: float = 0.1
    gamma: float = 0.9
    epsilon: float = 0.95

    def __post_init__(self) -> None:
        if not (0.0 < self.alpha <= 1.0):
            raise ValueError(f"alpha must be in (0, 1], got {self.alpha}")
        if not (0.0 <= self.gamma <= 1.0):
            raise ValueError(f"gamma must be in [0, 1], got {self.gamma}")
        if not (0.0 <= self.epsilon <= 1.0):
            raise ValueError(f"epsilon must be in [0, 1], got {self.epsilon}")

    def to_dict(self) -> dict:
        return {"alpha": self.alpha, "gamma": self.gamma, "epsilon": self.epsilon}

    @classmethod
    def from_dict(cls, data: dict) -> "LearningParams":
        return cls(
            alpha=float(data["alpha"]),
            gamma=float(data["gamma"]),
            epsilon=float(data["epsilon"]),
        )


# Defaults used by the two tutor models. The word model never explores.
DEFAULT_LEVEL_PARAMS = LearningParams(alpha=0.1, gamma=0.9, epsilon=0.95)
DEFAULT_WORD_PARAMS = LearningParams(alpha=0.1, gamma=0.9, epsilon=1.0)


class QTable:
    """Sparse (state, action) -> float table; unseen entries read as 0.0."""

    def __init__(self, entries: dict[tuple[State, Action], float] | None = None):
        self.entries: dict[tuple[State, Action], float] = dict(entries or {})

    def get(self, state: State, action: Action) -> float:
        return self.entries.get((state, action), 0.0)

    def max_value(self, state: State, actions: Iterable[Action]) -> float:
        return max(self.get(state, a) for a in actions)

    def update(
        self,
        state: State,
        action: Action,
        reward: float,
        next_state: State,
        next_actions: Iterable[Action],
        params: LearningParams,
    ) -> float:
        """Apply one Q update and return the new value.

        Raises CorruptTableError if any participating value is non-finite;
        all other entries are left untouched.
        """
        current = self.get(state, action)
        best_next = self.max_value(next_state, next_actions)
        if not all(math.isfinite(v) for v in (current, best_next, reward)):
            raise CorruptTableError(
                f"non-finite value in update at ({state!r}, {action.value}): "
                f"q={current!r} max_next={best_next!r} reward={reward!r}"
            )
        updated = current + params.alpha * (reward + params.gamma * best_next - current)
        self.entries[(state, action)] = updated
        return updated

    def greedy_actions(self, state: State, actions: Iterable[Action]) -> list[Action]:
        """All maximizing actions, in canonical (value-string) order."""
        ordered = sorted(actions, key=lambda a: a.value)
        if not ordered:
            raise ValueError("no actions to choose from")
        best = max(self.get(state, a) for a in ordered)
        return [a for a in ordered if self.get(state, a) == best]

    def validate_finite(self) -> None:
        for (state, action), q in self.entries.items():
            if not math.isfinite(q):
                raise CorruptTableError(
                    f"non-finite stored value at ({state!r}, {action.value}): {q!r}"
                )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QTable):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self) -> str:
        return f"QTable({self.entries!r})"


def select_action(
    table: QTable,
    state: State,
    valid_actions: Iterable[Action],
    epsilon: float,
    rng: random.Random,
) -> Action:
    """Epsilon-greedy pick with epsilon as the greedy probability.

    Draws consumed: one branch draw, then either one uniform choice over the
    valid actions (exploring) or one tie-break choice only when several
    actions share the maximum. Candidates are sorted by their value string so
    selection does not depend on set iteration order.
    """
    ordered = sorted(valid_actions, key=lambda a: a.value)
    if not ordered:
        raise ValueError(f"no valid actions for state {state!r}")
    if rng.random() < epsilon:
        tied = table.greedy_actions(state, ordered)
        if len(tied) == 1:
            return tied[0]
        return rng.choice(tied)
    return rng.choice(ordered)
