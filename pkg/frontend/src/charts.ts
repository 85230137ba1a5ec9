/** Inline SVG charts rebuilt from history records on every update. */
import type { HistoryRecord } from "./api.js";
import { LEVEL_LABELS, cumulativeRewardSeries, levelSeries } from "./state.js";

const WIDTH = 640;
const HEIGHT = 240;
const MARGIN = { left: 48, right: 16, top: 14, bottom: 30 };
const INNER_WIDTH = WIDTH - MARGIN.left - MARGIN.right;
const INNER_HEIGHT = HEIGHT - MARGIN.top - MARGIN.bottom;

function xAt(index: number, count: number): number {
  if (count <= 1) {
    return MARGIN.left;
  }
  return MARGIN.left + (INNER_WIDTH * index) / (count - 1);
}

function fmt(value: number): string {
  return value.toFixed(1);
}

interface Tick {
  value: number;
  label: string;
}

function chartBody(
  points: number[],
  yFor: (value: number) => number,
  ticks: Tick[],
  stroke: string,
  label: string,
): string {
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${WIDTH} ${HEIGHT}" ` +
      `width="${WIDTH}" height="${HEIGHT}" role="img" aria-label="${label}">`,
  );
  const bottom = HEIGHT - MARGIN.bottom;
  const right = WIDTH - MARGIN.right;
  for (const tick of ticks) {
    const y = fmt(yFor(tick.value));
    parts.push(
      `<line x1="${MARGIN.left}" y1="${y}" x2="${right}" y2="${y}" ` +
        `stroke="#dddddd" stroke-width="1"/>`,
    );
    parts.push(
      `<text x="${MARGIN.left - 8}" y="${y}" text-anchor="end" dominant-baseline="middle" ` +
        `font-size="11" fill="#444444">${tick.label}</text>`,
    );
  }
  parts.push(
    `<line x1="${MARGIN.left}" y1="${MARGIN.top}" x2="${MARGIN.left}" y2="${bottom}" ` +
      `stroke="#444444" stroke-width="1"/>`,
  );
  parts.push(
    `<line x1="${MARGIN.left}" y1="${bottom}" x2="${right}" y2="${bottom}" ` +
      `stroke="#444444" stroke-width="1"/>`,
  );
  parts.push(
    `<text x="${MARGIN.left + INNER_WIDTH / 2}" y="${HEIGHT - 8}" text-anchor="middle" ` +
      `font-size="11" fill="#444444">interaction</text>`,
  );
  if (points.length > 0) {
    const coords = points.map(
      (value, i) => `${fmt(xAt(i, points.length))},${fmt(yFor(value))}`,
    );
    if (points.length > 1) {
      parts.push(
        `<polyline points="${coords.join(" ")}" fill="none" ` +
          `stroke="${stroke}" stroke-width="2"/>`,
      );
    }
    for (const coord of coords) {
      const [x, y] = coord.split(",");
      parts.push(`<circle cx="${x}" cy="${y}" r="3" fill="${stroke}"/>`);
    }
  }
  parts.push("</svg>");
  return parts.join("");
}

/** Level after each interaction; the y axis is pinned to the six CEFR labels. */
export function levelChartSvg(records: HistoryRecord[]): string {
  const top = LEVEL_LABELS.length - 1;
  const yFor = (value: number) => MARGIN.top + INNER_HEIGHT * (1 - value / top);
  const ticks = LEVEL_LABELS.map((label, i) => ({ value: i, label }));
  return chartBody(levelSeries(records), yFor, ticks, "#1f6fb2", "level per interaction");
}

/** Cumulative reward after each interaction; the y axis always includes zero. */
export function rewardChartSvg(records: HistoryRecord[]): string {
  const series = cumulativeRewardSeries(records);
  let lo = Math.min(0, ...series);
  let hi = Math.max(0, ...series);
  if (lo === hi) {
    lo -= 1;
    hi += 1;
  }
  const yFor = (value: number) => MARGIN.top + (INNER_HEIGHT * (hi - value)) / (hi - lo);
  const values = Array.from(new Set([lo, 0, hi])).sort((a, b) => a - b);
  const ticks = values.map((value) => ({ value, label: String(value) }));
  return chartBody(series, yFor, ticks, "#b2611f", "cumulative reward per interaction");
}
