"""Per-student tutor session: the two-model interaction loop.

One interaction is: pick a level move (epsilon-greedy on the level model),
move there, draw a word among the level's active words, ask it, then feed the
single reward into both the level model and the shown word's model. A word
whose Q(Active, Remain) drops below Q(Active, Toggle) leaves the rotation;
when a level runs out of active words, its least-recently-shown word is
re-activated so the loop can never deadlock.

Sessions are single-writer. All randomness comes from the session's own
seeded stream; see rng.py for the draw order.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .content import Lexicon
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
from .rng import rng_from_jsonable, rng_state_to_jsonable

WORD_ACTIONS = (WordAction.REMAIN, WordAction.TOGGLE)


class PresentationMismatchError(ValueError):
    """The outcome being recorded does not belong to this session's state."""


@dataclass(frozen=True)
class Presentation:
    """A question as posed: where the level moved and which word was drawn."""

    index: int
    level_before: CefrLevel
    level_action: LevelAction
    level_after: CefrLevel
    word: str

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "level_before": self.level_before.label,
            "level_action": self.level_action.value,
            "level_after": self.level_after.label,
            "word": self.word,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Presentation":
        return cls(
            index=int(data["index"]),
            level_before=CefrLevel.from_label(data["level_before"]),
            level_action=LevelAction(data["level_action"]),
            level_after=CefrLevel.from_label(data["level_after"]),
            word=str(data["word"]),
        )


@dataclass(frozen=True)
class InteractionRecord:
    """One completed ask/answer cycle. index is 1-based."""

    index: int
    level_before: CefrLevel
    level_action: LevelAction
    level_after: CefrLevel
    word: str
    correct: bool
    reward: int

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "level_before": self.level_before.label,
            "level_action": self.level_action.value,
            "level_after": self.level_after.label,
            "word": self.word,
            "correct": self.correct,
            "reward": self.reward,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "InteractionRecord":
        return cls(
            index=int(data["index"]),
            level_before=CefrLevel.from_label(data["level_before"]),
            level_action=LevelAction(data["level_action"]),
            level_after=CefrLevel.from_label(data["level_after"]),
            word=str(data["word"]),
            correct=bool(data["correct"]),
            reward=int(data["reward"]),
        )


class WordModel:
    """State and value table for a single word."""

    def __init__(self, state: WordState = WordState.ACTIVE, table: QTable | None = None):
        self.state = state
        self.table = table if table is not None else QTable()

    def greedy_prefers_toggle(self) -> bool:
        """Strict preference only; a tie keeps the word in rotation."""
        return self.table.get(WordState.ACTIVE, WordAction.TOGGLE) > self.table.get(
            WordState.ACTIVE, WordAction.REMAIN
        )


class SessionState:
    """Everything the tutor knows about one student."""

    def __init__(
        self,
        student_id: str,
        seed: int,
        level_params: LearningParams = DEFAULT_LEVEL_PARAMS,
        word_params: LearningParams = DEFAULT_WORD_PARAMS,
    ):
        self.student_id = student_id
        self.seed = seed
        self.rng = random.Random(seed)
        self.current_level = CefrLevel.A1
        self.level_params = level_params
        self.word_params = word_params
        self.level_q = QTable()
        self.word_models: dict[str, WordModel] = {}
        self.cumulative_reward = 0
        self.history: list[InteractionRecord] = []
        self.last_shown: dict[str, int] = {}

    @property
    def interaction_count(self) -> int:
        return len(self.history)

    def word_model(self, word: str) -> WordModel:
        model = self.word_models.get(word)
        if model is None:
            model = WordModel()
            self.word_models[word] = model
        return model

    def word_state(self, word: str) -> WordState:
        model = self.word_models.get(word)
        return model.state if model is not None else WordState.ACTIVE

    # --- the interaction loop ------------------------------------------

    def next_item(self, lexicon: Lexicon) -> Presentation:
        """Pick the next question: level move first, then a word draw."""
        level_before = self.current_level
        action = select_action(
            self.level_q,
            level_before,
            valid_level_actions(level_before),
            self.level_params.epsilon,
            self.rng,
        )
        level_after = apply_level_action(level_before, action)

        words = lexicon.words_at(level_after)
        candidates = [w for w in words if self.word_state(w) is WordState.ACTIVE]
        if not candidates:
            candidates = [self._reactivate(words)]
        word = self.rng.choice(candidates)

        self.current_level = level_after
        return Presentation(
            index=self.interaction_count + 1,
            level_before=level_before,
            level_action=action,
            level_after=level_after,
            word=word,
        )

    def _reactivate(self, level_words: list[str]) -> str:
        """Bring the least-recently-shown word of a drained level back."""
        stale = min(level_words, key=lambda w: (self.last_shown.get(w, -1), w))
        model = self.word_model(stale)
        model.state = WordState.ACTIVE
        model.table.entries[(WordState.ACTIVE, WordAction.REMAIN)] = 0.0
        return stale

    def record_outcome(self, presentation: Presentation, correct: bool) -> InteractionRecord:
        """Fold one answer into both models and the log."""
        if (
            presentation.index != self.interaction_count + 1
            or presentation.level_after != self.current_level
        ):
            raise PresentationMismatchError(
                f"presentation #{presentation.index} at {presentation.level_after.label} "
                f"does not match session at interaction {self.interaction_count}, "
                f"level {self.current_level.label}"
            )
        reward = reward_for_answer(correct)

        self.level_q.update(
            presentation.level_before,
            presentation.level_action,
            reward,
            presentation.level_after,
            valid_level_actions(presentation.level_after),
            self.level_params,
        )

        model = self.word_model(presentation.word)
        model.table.update(
            WordState.ACTIVE,
            WordAction.REMAIN,
            reward,
            WordState.ACTIVE,
            WORD_ACTIONS,
            self.word_params,
        )
        if model.greedy_prefers_toggle():
            model.state = WordState.INACTIVE

        record = InteractionRecord(
            index=presentation.index,
            level_before=presentation.level_before,
            level_action=presentation.level_action,
            level_after=presentation.level_after,
            word=presentation.word,
            correct=correct,
            reward=reward,
        )
        self.cumulative_reward += reward
        self.history.append(record)
        self.last_shown[presentation.word] = record.index
        return record

    # --- serialization --------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "student_id": self.student_id,
            "seed": self.seed,
            "rng_state": rng_state_to_jsonable(self.rng),
            "current_level": self.current_level.label,
            "level_params": self.level_params.to_dict(),
            "word_params": self.word_params.to_dict(),
            "level_q": level_qtable_to_dict(self.level_q),
            "word_models": {
                word: {
                    "state": model.state.value,
                    "q": word_qtable_to_dict(word, model.table),
                }
                for word, model in sorted(self.word_models.items())
            },
            "cumulative_reward": self.cumulative_reward,
            "history": [r.to_dict() for r in self.history],
            "last_shown": dict(sorted(self.last_shown.items())),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SessionState":
        session = cls(
            student_id=str(data["student_id"]),
            seed=int(data["seed"]),
            level_params=LearningParams.from_dict(data["level_params"]),
            word_params=LearningParams.from_dict(data["word_params"]),
        )
        session.rng = rng_from_jsonable(data["rng_state"])
        session.current_level = CefrLevel.from_label(data["current_level"])
        session.level_q = level_qtable_from_dict(data["level_q"])
        session.word_models = {}
        for word, entry in data["word_models"].items():
            session.word_models[word] = WordModel(
                state=WordState(entry["state"]),
                table=word_qtable_from_dict(word, entry["q"]),
            )
        session.cumulative_reward = int(data["cumulative_reward"])
        session.history = [InteractionRecord.from_dict(r) for r in data["history"]]
        session.last_shown = {w: int(i) for w, i in data["last_shown"].items()}
        session.validate()
        return session

    def validate(self) -> None:
        """Consistency checks applied to anything loaded from disk."""
        self.level_q.validate_finite()
        for (state, _action) in self.level_q.entries:
            CefrLevel(int(state))
        for word, model in self.word_models.items():
            model.table.validate_finite()
            for (state, action) in model.table.entries:
                if not isinstance(state, WordState) or not isinstance(action, WordAction):
                    raise ValueError(f"bad word-model key for {word!r}: {(state, action)}")
        if self.cumulative_reward != sum(r.reward for r in self.history):
            raise ValueError("cumulative_reward disagrees with history")
        for n, record in enumerate(self.history, start=1):
            if record.index != n:
                raise ValueError(f"history indices not contiguous at {n}")


def level_qtable_to_dict(table: QTable) -> dict:
    entries = [
        {"state": CefrLevel(int(state)).label, "action": action.value, "q": q}
        for (state, action), q in table.entries.items()
    ]
    entries.sort(key=lambda e: (e["state"], e["action"]))
    return {"model": "level", "entries": entries}


def level_qtable_from_dict(data: dict) -> QTable:
    table = QTable()
    for entry in data["entries"]:
        key = (CefrLevel.from_label(entry["state"]), LevelAction(entry["action"]))
        table.entries[key] = float(entry["q"])
    return table


def word_qtable_to_dict(word: str, table: QTable) -> dict:
    entries = [
        {"state": state.value, "action": action.value, "q": q}
        for (state, action), q in table.entries.items()
    ]
    entries.sort(key=lambda e: (e["state"], e["action"]))
    return {"model": f"word:{word}", "entries": entries}


def word_qtable_from_dict(word: str, data: dict) -> QTable:
    table = QTable()
    for entry in data["entries"]:
        key = (WordState(entry["state"]), WordAction(entry["action"]))
        table.entries[key] = float(entry["q"])
    return table
