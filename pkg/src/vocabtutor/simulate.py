"""Simulation harness: seeded tutor runs for simulated students.

Reproduces the tutoring experiment: each (student, run) pair drives a fresh
session for a fixed number of interactions, recording the level trajectory
and cumulative reward. Runs are aggregated per student into per-interaction
median and quartiles (numpy percentile, linear interpolation) and written as
CSV plus SVG charts. Every output byte is a pure function of the config.
"""
from __future__ import annotations

import csv
import json
import logging
import traceback
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

try:
    import tomllib
except ImportError:  # python 3.10
    import tomli as tomllib

from .content import Lexicon, load_content
from .paths import bundled_embeddings_path, bundled_lexicon_path
from .qlearn import DEFAULT_LEVEL_PARAMS, DEFAULT_WORD_PARAMS, LearningParams
from .rng import derive_seed
from .session import InteractionRecord, SessionState
from .students import SimulatedStudent, default_students, simulate_answer

log = logging.getLogger(__name__)

DEFAULT_BASE_SEED = 20260818
DEFAULT_INTERACTIONS = 100
DEFAULT_RUNS = 20


@dataclass(frozen=True)
class SimulationConfig:
    students: list[SimulatedStudent] = field(default_factory=default_students)
    interactions: int = DEFAULT_INTERACTIONS
    runs: int = DEFAULT_RUNS
    base_seed: int = DEFAULT_BASE_SEED
    level_params: LearningParams = DEFAULT_LEVEL_PARAMS
    word_params: LearningParams = DEFAULT_WORD_PARAMS
    output_dir: str = "out"
    lexicon_path: str | None = None
    embeddings_path: str | None = None

    def __post_init__(self) -> None:
        if self.interactions < 1:
            raise ValueError(f"interactions must be >= 1, got {self.interactions}")
        if self.runs < 1:
            raise ValueError(f"runs must be >= 1, got {self.runs}")
        if not self.students:
            raise ValueError("at least one student is required")
        labels = [s.label for s in self.students]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate student labels: {labels}")


def load_config(path: str | Path) -> SimulationConfig:
    """Read a TOML or JSON config; relative paths resolve against the file."""
    path = Path(path)
    if path.suffix.lower() == ".toml":
        with open(path, "rb") as fh:
            raw = tomllib.load(fh)
    else:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)

    def resolve(name: str) -> str | None:
        value = raw.get(name)
        return str((path.parent / value).resolve()) if value else None

    students = [SimulatedStudent.from_dict(s) for s in raw.get("students", [])]
    return SimulationConfig(
        students=students or default_students(),
        interactions=int(raw.get("interactions", DEFAULT_INTERACTIONS)),
        runs=int(raw.get("runs", DEFAULT_RUNS)),
        base_seed=int(raw.get("base_seed", DEFAULT_BASE_SEED)),
        level_params=(
            LearningParams.from_dict(raw["level_params"])
            if "level_params" in raw
            else DEFAULT_LEVEL_PARAMS
        ),
        word_params=(
            LearningParams.from_dict(raw["word_params"])
            if "word_params" in raw
            else DEFAULT_WORD_PARAMS
        ),
        output_dir=str(raw.get("output_dir", "out")),
        lexicon_path=resolve("lexicon"),
        embeddings_path=resolve("embeddings"),
    )


def load_config_lexicon(config: SimulationConfig) -> Lexicon:
    lexicon = config.lexicon_path or bundled_lexicon_path()
    embeddings = config.embeddings_path or bundled_embeddings_path()
    return load_content(lexicon, embeddings)


@dataclass
class Trajectory:
    student_label: str
    run_index: int
    seed: int
    records: list[InteractionRecord]

    def level_indices(self) -> list[int]:
        return [int(r.level_after) for r in self.records]

    def cumulative_rewards(self) -> list[int]:
        total, out = 0, []
        for r in self.records:
            total += r.reward
            out.append(total)
        return out


@dataclass
class SimulationResult:
    config: SimulationConfig
    trajectories: dict[str, list[Trajectory]]
    failures: list[str] = field(default_factory=list)


def run_one(
    student: SimulatedStudent,
    run_index: int,
    config: SimulationConfig,
    lexicon: Lexicon,
) -> Trajectory:
    seed = derive_seed(config.base_seed, student.label, run_index)
    session = SessionState(
        student_id=student.label,
        seed=seed,
        level_params=config.level_params,
        word_params=config.word_params,
    )
    for _ in range(config.interactions):
        presentation = session.next_item(lexicon)
        correct = simulate_answer(student, float(int(presentation.level_after)), session.rng)
        session.record_outcome(presentation, correct)
    return Trajectory(student.label, run_index, seed, list(session.history))


def run_simulation(config: SimulationConfig, lexicon: Lexicon | None = None) -> SimulationResult:
    """Drive every (student, run) pair; one run failing never poisons the rest."""
    if lexicon is None:
        lexicon = load_config_lexicon(config)
    trajectories: dict[str, list[Trajectory]] = {}
    failures: list[str] = []
    for student in config.students:
        completed: list[Trajectory] = []
        for run_index in range(config.runs):
            try:
                completed.append(run_one(student, run_index, config, lexicon))
            except Exception:
                failures.append(
                    f"{student.label} run {run_index}:\n{traceback.format_exc()}"
                )
                log.error("run failed: student=%s run=%d", student.label, run_index)
        trajectories[student.label] = completed
    return SimulationResult(config=config, trajectories=trajectories, failures=failures)


# --- aggregation ----------------------------------------------------------


@dataclass
class StudentAggregate:
    label: str
    level_median: list[float]
    level_q1: list[float]
    level_q3: list[float]
    reward_median: list[float]
    reward_q1: list[float]
    reward_q3: list[float]


def compute_aggregate(result: SimulationResult) -> list[StudentAggregate]:
    """Per-interaction median/quartiles across runs, per student."""
    out = []
    for student in result.config.students:
        runs = result.trajectories.get(student.label, [])
        if not runs:
            continue
        levels = np.array([t.level_indices() for t in runs], dtype=np.float64)
        rewards = np.array([t.cumulative_rewards() for t in runs], dtype=np.float64)
        out.append(
            StudentAggregate(
                label=student.label,
                level_median=[float(v) for v in np.median(levels, axis=0)],
                level_q1=[float(v) for v in np.percentile(levels, 25, axis=0)],
                level_q3=[float(v) for v in np.percentile(levels, 75, axis=0)],
                reward_median=[float(v) for v in np.median(rewards, axis=0)],
                reward_q1=[float(v) for v in np.percentile(rewards, 25, axis=0)],
                reward_q3=[float(v) for v in np.percentile(rewards, 75, axis=0)],
            )
        )
    return out


# --- CSV emission ---------------------------------------------------------

RUN_CSV_HEADER = ["interaction", "level", "level_index", "reward", "cumulative_reward", "word", "correct"]
AGGREGATE_CSV_HEADER = [
    "student", "interaction",
    "level_median", "level_q1", "level_q3",
    "cum_reward_median", "cum_reward_q1", "cum_reward_q3",
]


def _fmt(value: float) -> str:
    return repr(float(value))


def write_run_csv(trajectory: Trajectory, path: Path) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(RUN_CSV_HEADER)
            total = 0
            for record in trajectory.records:
                total += record.reward
                writer.writerow(
                    [
                        record.index,
                        record.level_after.label,
                        int(record.level_after),
                        record.reward,
                        total,
                        record.word,
                        "true" if record.correct else "false",
                    ]
                )
    except OSError as exc:
        raise OSError(f"failed writing run CSV {path}: {exc}") from exc


def write_aggregate_csv(aggregate: list[StudentAggregate], path: Path) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(AGGREGATE_CSV_HEADER)
            for agg in aggregate:
                for i in range(len(agg.level_median)):
                    writer.writerow(
                        [
                            agg.label,
                            i + 1,
                            _fmt(agg.level_median[i]),
                            _fmt(agg.level_q1[i]),
                            _fmt(agg.level_q3[i]),
                            _fmt(agg.reward_median[i]),
                            _fmt(agg.reward_q1[i]),
                            _fmt(agg.reward_q3[i]),
                        ]
                    )
    except OSError as exc:
        raise OSError(f"failed writing aggregate CSV {path}: {exc}") from exc


def write_outputs(result: SimulationResult, out_dir: str | Path) -> list[Path]:
    """Write per-run CSVs, the aggregate CSV and both charts; returns paths."""
    from .charts import render_chart  # local import to keep module load light

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for label in (s.label for s in result.config.students):
        for trajectory in result.trajectories.get(label, []):
            path = out / f"{label}_run{trajectory.run_index:02d}.csv"
            write_run_csv(trajectory, path)
            written.append(path)
    aggregate = compute_aggregate(result)
    agg_path = out / "aggregate.csv"
    write_aggregate_csv(aggregate, agg_path)
    written.append(agg_path)
    if aggregate:
        for metric, name in (("level", "levels.svg"), ("cumulative_reward", "cumulative_reward.svg")):
            chart_path = out / name
            render_chart(aggregate, metric, chart_path)
            written.append(chart_path)
    return written
