from __future__ import annotations

import math
import random
from collections import Counter

import pytest

from vocabtutor.domain import CefrLevel, LevelAction, WordAction, WordState
from vocabtutor.qlearn import (
    DEFAULT_LEVEL_PARAMS,
    DEFAULT_WORD_PARAMS,
    CorruptTableError,
    LearningParams,
    QTable,
    select_action,
)

A = CefrLevel.A1
B = CefrLevel.A2
ACTIONS = (LevelAction.UP, LevelAction.STAY, LevelAction.DOWN)


def test_default_params() -> None:
    assert DEFAULT_LEVEL_PARAMS == LearningParams(0.1, 0.9, 0.95)
    assert DEFAULT_WORD_PARAMS == LearningParams(0.1, 0.9, 1.0)


def test_param_validation() -> None:
    with pytest.raises(ValueError):
        LearningParams(alpha=0.0)
    with pytest.raises(ValueError):
        LearningParams(alpha=1.5)
    with pytest.raises(ValueError):
        LearningParams(gamma=-0.1)
    with pytest.raises(ValueError):
        LearningParams(epsilon=1.01)


def test_unwritten_entries_read_zero() -> None:
    table = QTable()
    assert table.get(A, LevelAction.UP) == 0.0
    assert table.max_value(B, ACTIONS) == 0.0


def test_update_on_zero_table_equals_alpha_times_reward() -> None:
    # all-zero table, alpha=0.1, gamma=0.9, r=+1 -> exactly 0.1
    table = QTable()
    got = table.update(A, LevelAction.UP, 1, B, ACTIONS, LearningParams(0.1, 0.9, 0.95))
    assert got == 0.1
    assert table.get(A, LevelAction.UP) == 0.1


def test_update_known_value_case() -> None:
    # Q=0.5, best next 0.5, r=-1: 0.5 + 0.1*(-1 + 0.45 - 0.5) = 0.395
    table = QTable({(A, LevelAction.UP): 0.5, (B, LevelAction.STAY): 0.5})
    got = table.update(A, LevelAction.UP, -1, B, ACTIONS, LearningParams(0.1, 0.9, 0.95))
    assert got == pytest.approx(0.395, abs=1e-15)


def test_alpha_zero_rejected_but_tiny_alpha_barely_moves() -> None:
    with pytest.raises(ValueError):
        LearningParams(alpha=0.0, gamma=0.9, epsilon=0.95)
    table = QTable({(A, LevelAction.UP): 0.25})
    table.update(A, LevelAction.UP, 1, B, ACTIONS, LearningParams(1e-12, 0.9, 0.95))
    assert table.get(A, LevelAction.UP) == pytest.approx(0.25, abs=1e-11)


def test_update_leaves_other_entries_alone() -> None:
    table = QTable({(A, LevelAction.STAY): 0.3, (B, LevelAction.UP): -0.2})
    table.update(A, LevelAction.UP, 1, B, ACTIONS, DEFAULT_LEVEL_PARAMS)
    assert table.get(A, LevelAction.STAY) == 0.3
    assert table.get(B, LevelAction.UP) == -0.2


def test_fixed_point_is_left_unchanged() -> None:
    # if Q(s,a) already equals r + gamma*max Q(s',.), the update is a no-op
    params = LearningParams(0.37, 0.9, 0.95)
    table = QTable({(B, LevelAction.STAY): 0.5})
    fixed = -1 + 0.9 * 0.5
    table.entries[(A, LevelAction.UP)] = fixed
    table.update(A, LevelAction.UP, -1, B, ACTIONS, params)
    assert table.get(A, LevelAction.UP) == pytest.approx(fixed, abs=1e-15)


def test_update_contracts_distance_to_target() -> None:
    # |target - Q_new| = (1 - alpha) * |target - Q_old| for random tuples
    rng = random.Random(7)
    for _ in range(500):
        params = LearningParams(rng.uniform(0.01, 1.0), rng.uniform(0.0, 1.0), 0.95)
        table = QTable()
        for s in (A, B):
            for a in ACTIONS:
                table.entries[(s, a)] = rng.uniform(-5, 5)
        r = rng.choice((-1, 1))
        old = table.get(A, LevelAction.UP)
        target = r + params.gamma * table.max_value(B, ACTIONS)
        table.update(A, LevelAction.UP, r, B, ACTIONS, params)
        new = table.get(A, LevelAction.UP)
        assert abs(target - new) == pytest.approx(
            (1 - params.alpha) * abs(target - old), abs=1e-9
        )


def test_non_finite_values_are_rejected() -> None:
    table = QTable({(A, LevelAction.UP): float("nan")})
    with pytest.raises(CorruptTableError):
        table.update(A, LevelAction.UP, 1, B, ACTIONS, DEFAULT_LEVEL_PARAMS)
    table = QTable({(B, LevelAction.STAY): float("inf")})
    with pytest.raises(CorruptTableError):
        table.update(A, LevelAction.UP, 1, B, ACTIONS, DEFAULT_LEVEL_PARAMS)
    with pytest.raises(CorruptTableError):
        QTable({(A, LevelAction.UP): float("-inf")}).validate_finite()


# --- action selection ----------------------------------------------------


def test_pure_greedy_with_strict_maximizer() -> None:
    # epsilon=1 and a strict maximizer: the same action every single time
    table = QTable({(A, LevelAction.UP): 0.3})
    rng = random.Random(123)
    for _ in range(2000):
        assert select_action(table, A, ACTIONS, 1.0, rng) is LevelAction.UP


def test_epsilon_zero_is_uniform() -> None:
    table = QTable({(A, LevelAction.UP): 5.0})
    rng = random.Random(99)
    counts: Counter = Counter(
        select_action(table, A, ACTIONS, 0.0, rng) for _ in range(30_000)
    )
    for action in ACTIONS:
        assert counts[action] / 30_000 == pytest.approx(1 / 3, abs=0.02)


def test_mixture_frequency_at_default_epsilon() -> None:
    # greedy prob 0.95 plus its share of the uniform remainder
    table = QTable({(A, LevelAction.UP): 1.0})
    rng = random.Random(4242)
    n = 20_000
    hits = sum(select_action(table, A, ACTIONS, 0.95, rng) is LevelAction.UP for _ in range(n))
    assert hits / n == pytest.approx(0.95 + 0.05 / 3, abs=0.01)


def test_tie_break_is_uniform_among_maximizers() -> None:
    table = QTable({(A, LevelAction.UP): 0.7, (A, LevelAction.DOWN): 0.7})
    rng = random.Random(11)
    counts: Counter = Counter(
        select_action(table, A, ACTIONS, 1.0, rng) for _ in range(20_000)
    )
    assert counts[LevelAction.STAY] == 0
    assert counts[LevelAction.UP] / 20_000 == pytest.approx(0.5, abs=0.02)


def test_selection_respects_valid_action_subset() -> None:
    table = QTable({(A, LevelAction.DOWN): 9.9})
    rng = random.Random(5)
    allowed = (LevelAction.UP, LevelAction.STAY)
    for _ in range(500):
        assert select_action(table, A, allowed, 0.5, rng) in allowed


def test_selection_is_deterministic_given_seed() -> None:
    table = QTable({(A, LevelAction.UP): 0.2, (A, LevelAction.STAY): 0.2})
    first = [
        select_action(table, A, ACTIONS, 0.8, random.Random(77)) for _ in range(1)
    ]
    run_a = random.Random(77)
    run_b = random.Random(77)
    seq_a = [select_action(table, A, ACTIONS, 0.8, run_a) for _ in range(200)]
    seq_b = [select_action(table, A, ACTIONS, 0.8, run_b) for _ in range(200)]
    assert seq_a == seq_b
    assert first[0] == seq_a[0]


def test_empty_action_set_is_an_error() -> None:
    with pytest.raises(ValueError):
        select_action(QTable(), A, (), 0.5, random.Random(1))


def test_word_model_keys_work_like_level_keys() -> None:
    table = QTable()
    table.update(
        WordState.ACTIVE,
        WordAction.REMAIN,
        -1,
        WordState.ACTIVE,
        (WordAction.REMAIN, WordAction.TOGGLE),
        DEFAULT_WORD_PARAMS,
    )
    assert table.get(WordState.ACTIVE, WordAction.REMAIN) == pytest.approx(-0.1)
    assert table.get(WordState.ACTIVE, WordAction.TOGGLE) == 0.0


def test_greedy_actions_ranks_exact_ties() -> None:
    table = QTable({(A, LevelAction.UP): 0.1, (A, LevelAction.STAY): 0.1})
    tied = table.greedy_actions(A, ACTIONS)
    assert set(tied) == {LevelAction.UP, LevelAction.STAY}
