"""Q-learning curriculum tutor for visual vocabulary practice."""

from .domain import (
    CefrLevel,
    LevelAction,
    WordAction,
    WordState,
    apply_level_action,
    reward_for_answer,
    valid_level_actions,
)
from .qlearn import (
    DEFAULT_LEVEL_PARAMS,
    DEFAULT_WORD_PARAMS,
    LearningParams,
    QTable,
    select_action,
)
from .session import InteractionRecord, Presentation, SessionState
from .students import SimulatedStudent, default_students, simulate_answer, success_probability

__version__ = "0.1.0"

__all__ = [
    "CefrLevel",
    "LevelAction",
    "WordAction",
    "WordState",
    "apply_level_action",
    "reward_for_answer",
    "valid_level_actions",
    "LearningParams",
    "QTable",
    "select_action",
    "DEFAULT_LEVEL_PARAMS",
    "DEFAULT_WORD_PARAMS",
    "SessionState",
    "Presentation",
    "InteractionRecord",
    "SimulatedStudent",
    "default_students",
    "success_probability",
    "simulate_answer",
    "__version__",
]
