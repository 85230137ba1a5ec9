from __future__ import annotations

import math
import random

import pytest

from vocabtutor.students import (
    DEFAULT_B,
    SimulatedStudent,
    default_students,
    load_student_profiles,
    simulate_answer,
    success_probability,
)


def test_default_roster() -> None:
    students = default_students()
    assert [s.label for s in students] == ["beginner", "intermediate", "advanced"]
    assert [s.proficiency for s in students] == [0.5, 2.5, 4.5]
    for s in students:
        assert s.b == pytest.approx(math.log(4.0))
        assert s.c == 1.0


def test_matched_level_pass_rate_is_three_quarters() -> None:
    for student in default_students():
        p = success_probability(student, student.proficiency)
        assert abs(p - 0.75) <= 1e-12


def test_known_value_six_levels_above() -> None:
    # gap +6 with defaults, frozen from a direct evaluation of the curve
    student = SimulatedStudent("x", 0.0)
    assert success_probability(student, 6.0) == pytest.approx(
        0.003430382911245644, abs=1e-15
    )


def test_far_easier_items_approach_certainty() -> None:
    student = SimulatedStudent("adv", 6.0, c=2.0)
    assert success_probability(student, 0.0) > 0.9999


def test_probability_decreasing_in_item_level() -> None:
    # non-increasing everywhere; strictly decreasing once clear of float
    # saturation at the easy end
    for student in default_students():
        grid = [i / 10 for i in range(0, 61)]
        probs = [success_probability(student, lvl) for lvl in grid]
        for earlier, later in zip(probs, probs[1:]):
            assert later <= earlier
            if earlier < 1.0 - 1e-12:
                assert later < earlier


def test_probability_strictly_inside_unit_interval() -> None:
    for student in default_students():
        for lvl in (0.0, 1.7, 3.0, 4.2, 6.0):
            p = success_probability(student, lvl)
            assert 0.0 < p < 1.0


def test_curve_flatter_on_the_easy_side() -> None:
    # |dP/dgap| by central finite differences: shallow at gap=-2, steep at +0.5
    student = SimulatedStudent("s", 3.0)
    h = 1e-5

    def slope(gap: float) -> float:
        lo = success_probability(student, student.proficiency + gap - h)
        hi = success_probability(student, student.proficiency + gap + h)
        return abs(hi - lo) / (2 * h)

    assert slope(-2.0) < slope(0.5)


def test_parameter_validation() -> None:
    with pytest.raises(ValueError):
        SimulatedStudent("bad", -0.5)
    with pytest.raises(ValueError):
        SimulatedStudent("bad", 7.0)
    with pytest.raises(ValueError):
        SimulatedStudent("bad", 2.0, b=0.0)
    with pytest.raises(ValueError):
        SimulatedStudent("bad", 2.0, c=-1.0)


def test_simulated_answers_are_deterministic_per_seed() -> None:
    student = SimulatedStudent("beginner", 0.5)
    seq_a = [simulate_answer(student, 1.0, rng) for rng in [random.Random(31)] for _ in range(50)]

    rng_a, rng_b = random.Random(31), random.Random(31)
    seq_a = [simulate_answer(student, 1.0, rng_a) for _ in range(200)]
    seq_b = [simulate_answer(student, 1.0, rng_b) for _ in range(200)]
    assert seq_a == seq_b


def test_degenerate_bernoulli_is_always_true() -> None:
    # probability indistinguishable from 1 -> every draw comes back correct
    student = SimulatedStudent("easy", 6.0, b=50.0)
    rng = random.Random(8)
    assert all(simulate_answer(student, 0.0, rng) for _ in range(5000))


def test_monte_carlo_matches_analytic_rate() -> None:
    student = SimulatedStudent("intermediate", 2.5)
    rng = random.Random(606)
    n = 50_000
    hits = sum(simulate_answer(student, 2.5, rng) for _ in range(n))
    assert hits / n == pytest.approx(0.75, abs=0.01)


def test_profiles_load_from_json(tmp_path) -> None:
    path = tmp_path / "students.json"
    path.write_text(
        '[{"label": "novice", "proficiency": 1.0},'
        ' {"label": "expert", "proficiency": 5.0, "b": 2.0, "c": 0.5}]'
    )
    novice, expert = load_student_profiles(path)
    assert novice == SimulatedStudent("novice", 1.0)
    assert expert == SimulatedStudent("expert", 5.0, b=2.0, c=0.5)
    assert novice.b == DEFAULT_B


def test_profiles_load_from_toml(tmp_path) -> None:
    path = tmp_path / "students.toml"
    path.write_text(
        "[[students]]\nlabel = 'novice'\nproficiency = 1.0\n"
        "[[students]]\nlabel = 'expert'\nproficiency = 5.0\nb = 2.0\n"
    )
    novice, expert = load_student_profiles(path)
    assert expert.b == 2.0
    assert novice.c == 1.0


def test_profile_files_must_not_repeat_labels(tmp_path) -> None:
    path = tmp_path / "students.json"
    path.write_text('[{"label": "a", "proficiency": 1.0}, {"label": "a", "proficiency": 2.0}]')
    with pytest.raises(ValueError):
        load_student_profiles(path)
    empty = tmp_path / "empty.json"
    empty.write_text("[]")
    with pytest.raises(ValueError):
        load_student_profiles(empty)
