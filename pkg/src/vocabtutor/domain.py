"""Core vocabulary-tutor domain: CEFR levels, actions, states and rewards.

Everything else in the package builds on these types. They are deliberately
small: levels are an IntEnum indexed 0..5, actions and word states are string
enums, and rewards are plain ints.
"""
from __future__ import annotations

from enum import Enum, IntEnum


class CefrLevel(IntEnum):
    """CEFR difficulty scale, ordered A1 (easiest) to C2 (hardest)."""

    A1 = 0
    A2 = 1
    B1 = 2
    B2 = 3
    C1 = 4
    C2 = 5

    @property
    def label(self) -> str:
        return self.name

    @classmethod
    def from_label(cls, label: str) -> "CefrLevel":
        try:
            return cls[label.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown CEFR label: {label!r}") from None


LEVEL_MIN = CefrLevel.A1
LEVEL_MAX = CefrLevel.C2


class LevelAction(Enum):
    """Moves available to the level policy."""

    UP = "up"
    STAY = "stay"
    DOWN = "down"


class WordState(Enum):
    """Whether a word is still in the review rotation."""

    ACTIVE = "active"
    INACTIVE = "inactive"


class WordAction(Enum):
    """Per-word policy: keep the word in rotation or toggle it out."""

    REMAIN = "remain"
    TOGGLE = "toggle"


# Reward signal shared by both models: reviewing something already known has
# little value, so a correct answer is penalised and a miss is rewarded.
REWARD_CORRECT = -1
REWARD_INCORRECT = 1


def reward_for_answer(correct: bool) -> int:
    return REWARD_CORRECT if correct else REWARD_INCORRECT


def clamp_level(index: int) -> CefrLevel:
    """Clamp an arbitrary integer onto the CEFR index range."""
    return CefrLevel(max(int(LEVEL_MIN), min(int(LEVEL_MAX), index)))


def apply_level_action(level: CefrLevel, action: LevelAction) -> CefrLevel:
    """Apply a level move. Out-of-range moves clamp to the boundary.

    Callers normally restrict themselves to valid_level_actions(), which makes
    the clamp here purely defensive.
    """
    if action is LevelAction.UP:
        return clamp_level(int(level) + 1)
    if action is LevelAction.DOWN:
        return clamp_level(int(level) - 1)
    return level


def valid_level_actions(level: CefrLevel) -> set[LevelAction]:
    """Actions that do not run off the end of the scale at this level."""
    actions = {LevelAction.UP, LevelAction.STAY, LevelAction.DOWN}
    if level == LEVEL_MIN:
        actions.discard(LevelAction.DOWN)
    if level == LEVEL_MAX:
        actions.discard(LevelAction.UP)
    return actions
