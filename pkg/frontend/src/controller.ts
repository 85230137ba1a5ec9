/** Session flow between the API client and a view, free of DOM references.
 *
 * The controller only ever copies server responses into ClientSession; the
 * view re-renders charts from the history payload each time. Answer races
 * (a 409 from a stale question id) resolve by refetching history and the
 * pending question, so two tabs converge on the same server state.
 */
import { ApiError, TutorApi } from "./api.js";
import type { AnswerResult, History, Question } from "./api.js";
import { emptyHistory } from "./state.js";
import type { ClientSession } from "./state.js";

export const SESSION_KEY = "vocabtutor.session_id";

export interface StorageLike {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
  removeItem(key: string): void;
}

export interface View {
  showQuestion(question: Question): void;
  showFeedback(result: AnswerResult): void;
  showCharts(history: History): void;
  showError(message: string): void;
  setBusy(busy: boolean): void;
}

export function describeError(error: unknown): string {
  if (error instanceof ApiError) {
    return error.message;
  }
  if (error instanceof Error && error.message !== "") {
    return `service unreachable (${error.message})`;
  }
  return "service unreachable";
}

export class Controller {
  session: ClientSession | null = null;

  private readonly api: TutorApi;
  private readonly view: View;
  private readonly storage: StorageLike;

  constructor(api: TutorApi, view: View, storage: StorageLike) {
    this.api = api;
    this.view = view;
    this.storage = storage;
  }

  /** Resume the stored session if the server still knows it, else start fresh. */
  async start(): Promise<void> {
    this.view.setBusy(true);
    try {
      const stored = this.storage.getItem(SESSION_KEY);
      if (stored !== null && (await this.resume(stored))) {
        return;
      }
      await this.startFresh();
    } catch (error) {
      this.view.showError(describeError(error));
    } finally {
      this.view.setBusy(false);
    }
  }

  /** Submit an answer for the pending question, then advance to the next one. */
  async answer(text: string): Promise<void> {
    const session = this.session;
    if (session === null || session.question === null) {
      return;
    }
    const trimmed = text.trim();
    if (trimmed === "") {
      return;
    }
    this.view.setBusy(true);
    try {
      let result: AnswerResult | null = null;
      try {
        result = await this.api.submitAnswer(
          session.sessionId,
          session.question.question_id,
          trimmed,
        );
      } catch (error) {
        if (!(error instanceof ApiError) || error.status !== 409) {
          throw error;
        }
        // the question was answered elsewhere; fall through and resync
      }
      if (result !== null) {
        this.view.showFeedback(result);
      }
      await this.refresh(session.sessionId);
    } catch (error) {
      this.view.showError(describeError(error));
    } finally {
      this.view.setBusy(false);
    }
  }

  /** Retry after an error: refresh the session if one exists, else start over. */
  async retry(): Promise<void> {
    if (this.session === null) {
      await this.start();
      return;
    }
    this.view.setBusy(true);
    try {
      await this.refresh(this.session.sessionId);
    } catch (error) {
      this.view.showError(describeError(error));
    } finally {
      this.view.setBusy(false);
    }
  }

  private async resume(sessionId: string): Promise<boolean> {
    try {
      await this.refresh(sessionId);
      return true;
    } catch (error) {
      if (error instanceof ApiError && error.status === 404) {
        this.storage.removeItem(SESSION_KEY);
        return false;
      }
      throw error;
    }
  }

  private async startFresh(): Promise<void> {
    const info = await this.api.createSession();
    this.storage.setItem(SESSION_KEY, info.session_id);
    this.session = {
      sessionId: info.session_id,
      question: null,
      history: emptyHistory(),
    };
    await this.refresh(info.session_id);
  }

  private async refresh(sessionId: string): Promise<void> {
    const history = await this.api.getHistory(sessionId);
    const question = await this.api.getNext(sessionId);
    this.session = { sessionId, question, history };
    this.view.showCharts(history);
    this.view.showQuestion(question);
  }
}
