/** Pure helpers that turn service payloads into chart-ready series.
 *
 * Everything here is a function of the server's responses. The client keeps
 * no curriculum state of its own: levels and rewards are read back from the
 * history endpoint, never recomputed locally.
 */
import type { History, HistoryRecord, Question } from "./api.js";

export const LEVEL_LABELS = ["A1", "A2", "B1", "B2", "C1", "C2"] as const;

export interface ClientSession {
  sessionId: string;
  question: Question | null;
  history: History;
}

export function emptyHistory(): History {
  return { current_level: "A1", cumulative_reward: 0, records: [] };
}

export function levelIndex(label: string): number {
  const index = (LEVEL_LABELS as readonly string[]).indexOf(label);
  if (index < 0) {
    throw new Error(`unknown level label: ${label}`);
  }
  return index;
}

/** Level index after each answered interaction, in interaction order. */
export function levelSeries(records: HistoryRecord[]): number[] {
  return records.map((record) => levelIndex(record.level_after));
}

/** Running total of per-interaction rewards, in interaction order. */
export function cumulativeRewardSeries(records: HistoryRecord[]): number[] {
  const series: number[] = [];
  let total = 0;
  for (const record of records) {
    total += record.reward;
    series.push(total);
  }
  return series;
}
