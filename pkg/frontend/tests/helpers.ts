/** Shared test doubles: an in-memory localStorage and a call-recording view. */
import type { AnswerResult, History, Question } from "../src/api.js";
import type { StorageLike, View } from "../src/controller.js";

export class MemoryStorage implements StorageLike {
  private readonly map = new Map<string, string>();

  getItem(key: string): string | null {
    return this.map.get(key) ?? null;
  }

  setItem(key: string, value: string): void {
    this.map.set(key, value);
  }

  removeItem(key: string): void {
    this.map.delete(key);
  }
}

export class RecordingView implements View {
  questions: Question[] = [];
  feedback: AnswerResult[] = [];
  charts: History[] = [];
  errors: string[] = [];
  busy: boolean[] = [];

  showQuestion(question: Question): void {
    this.questions.push(question);
  }

  showFeedback(result: AnswerResult): void {
    this.feedback.push(result);
  }

  showCharts(history: History): void {
    this.charts.push(JSON.parse(JSON.stringify(history)) as History);
  }

  showError(message: string): void {
    this.errors.push(message);
  }

  setBusy(busy: boolean): void {
    this.busy.push(busy);
  }
}
