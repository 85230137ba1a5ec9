"""Hand-rolled SVG line charts for simulation aggregates.

One series per student: a median polyline over a shaded interquartile band.
No plotting dependency; the output is deterministic, diffable text, which is
what the golden tests and the byte-identity guarantee rely on.
"""
from __future__ import annotations

from pathlib import Path
from xml.sax.saxutils import escape

from .domain import CefrLevel
from .simulate import StudentAggregate

WIDTH, HEIGHT = 760, 440
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 64, 168, 44, 52

PALETTE = ["#2563eb", "#dc2626", "#16a34a", "#9333ea", "#ea580c", "#0891b2"]

_METRICS = {
    "level": {
        "title": "CEFR level (median with interquartile band)",
        "y_label": "CEFR level",
    },
    "cumulative_reward": {
        "title": "Cumulative reward (median with interquartile band)",
        "y_label": "cumulative reward",
    },
}


def render_chart(
    aggregate: list[StudentAggregate], metric: str, path: str | Path
) -> None:
    """Write an SVG for `metric` in {"level", "cumulative_reward"}."""
    if metric not in _METRICS:
        raise ValueError(f"unsupported metric {metric!r}; expected one of {sorted(_METRICS)}")
    if not aggregate:
        raise ValueError("aggregate is empty; nothing to chart")
    Path(path).write_text(build_chart_svg(aggregate, metric), encoding="utf-8")


def _series(agg: StudentAggregate, metric: str) -> tuple[list[float], list[float], list[float]]:
    if metric == "level":
        return agg.level_median, agg.level_q1, agg.level_q3
    return agg.reward_median, agg.reward_q1, agg.reward_q3


def build_chart_svg(aggregate: list[StudentAggregate], metric: str) -> str:
    n = len(aggregate[0].level_median)
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    if metric == "level":
        y_min, y_max = 0.0, 5.0
        y_ticks = [(float(lvl), lvl.label) for lvl in CefrLevel]
    else:
        values = [v for agg in aggregate for s in _series(agg, metric) for v in s]
        y_min, y_max = min(values + [0.0]), max(values + [0.0])
        if y_min == y_max:
            y_min, y_max = y_min - 1.0, y_max + 1.0
        y_ticks = [
            (y_min + frac * (y_max - y_min), f"{y_min + frac * (y_max - y_min):.0f}")
            for frac in (0.0, 0.25, 0.5, 0.75, 1.0)
        ]

    def x_of(i: int) -> float:  # i is 0-based interaction offset
        if n == 1:
            return MARGIN_LEFT + plot_w / 2
        return MARGIN_LEFT + i * plot_w / (n - 1)

    def y_of(v: float) -> float:
        return MARGIN_TOP + (1.0 - (v - y_min) / (y_max - y_min)) * plot_h

    def pts(values: list[float]) -> str:
        return " ".join(f"{x_of(i):.2f},{y_of(v):.2f}" for i, v in enumerate(values))

    meta = _METRICS[metric]
    parts: list[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif">'
    )
    parts.append(f'<rect width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>')
    parts.append(
        f'<text x="{MARGIN_LEFT}" y="24" font-size="15" fill="#111827">{escape(meta["title"])}</text>'
    )

    # axes
    x0, y0 = MARGIN_LEFT, MARGIN_TOP + plot_h
    x1, y1 = MARGIN_LEFT + plot_w, MARGIN_TOP
    parts.append(
        f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="#374151" stroke-width="1"/>'
    )
    parts.append(
        f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="#374151" stroke-width="1"/>'
    )

    # x ticks: interaction 1, then round steps
    step = max(1, round(n / 5))
    ticks = sorted({1, *range(step, n + 1, step), n})
    for t in ticks:
        x = x_of(t - 1)
        parts.append(
            f'<line x1="{x:.2f}" y1="{y0}" x2="{x:.2f}" y2="{y0 + 5}" stroke="#374151" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x:.2f}" y="{y0 + 20}" font-size="11" fill="#374151" text-anchor="middle">{t}</text>'
        )
    parts.append(
        f'<text x="{MARGIN_LEFT + plot_w / 2:.2f}" y="{HEIGHT - 12}" font-size="12" '
        f'fill="#111827" text-anchor="middle">interaction</text>'
    )

    # y ticks
    for value, label in y_ticks:
        y = y_of(value)
        parts.append(
            f'<line x1="{x0 - 5}" y1="{y:.2f}" x2="{x0}" y2="{y:.2f}" stroke="#374151" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x0 - 9}" y="{y + 4:.2f}" font-size="11" fill="#374151" text-anchor="end">{escape(label)}</text>'
        )
    parts.append(
        f'<text x="18" y="{MARGIN_TOP + plot_h / 2:.2f}" font-size="12" fill="#111827" '
        f'text-anchor="middle" transform="rotate(-90 18 {MARGIN_TOP + plot_h / 2:.2f})">'
        f"{escape(meta['y_label'])}</text>"
    )

    # bands then lines, so lines stay visible
    for idx, agg in enumerate(aggregate):
        color = PALETTE[idx % len(PALETTE)]
        _median, q1, q3 = _series(agg, metric)
        band = pts(q3) + " " + " ".join(
            f"{x_of(i):.2f},{y_of(v):.2f}" for i, v in reversed(list(enumerate(q1)))
        )
        parts.append(f'<polygon points="{band}" fill="{color}" fill-opacity="0.14" stroke="none"/>')
    for idx, agg in enumerate(aggregate):
        color = PALETTE[idx % len(PALETTE)]
        median, _q1, _q3 = _series(agg, metric)
        parts.append(
            f'<polyline points="{pts(median)}" fill="none" stroke="{color}" stroke-width="1.8"/>'
        )

    # legend
    legend_x = WIDTH - MARGIN_RIGHT + 14
    for idx, agg in enumerate(aggregate):
        color = PALETTE[idx % len(PALETTE)]
        y = MARGIN_TOP + 8 + idx * 22
        parts.append(
            f'<line x1="{legend_x}" y1="{y}" x2="{legend_x + 22}" y2="{y}" '
            f'stroke="{color}" stroke-width="3"/>'
        )
        parts.append(
            f'<text x="{legend_x + 28}" y="{y + 4}" font-size="12" fill="#111827">{escape(agg.label)}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
