/** Typed client for the tutor's /v1 JSON endpoints. */

export interface SessionInfo {
  session_id: string;
  seed: number;
  created_at: string;
}

export interface Question {
  question_id: string;
  image_ref: string;
  level_label: string;
}

export interface AnswerResult {
  correct: boolean;
  accepted_answers_shown: boolean;
  level_label: string;
  cumulative_reward: number;
  interaction_index: number;
  target_word?: string;
  accepted_answers?: string[];
}

export interface HistoryRecord {
  index: number;
  level_before: string;
  level_action: string;
  level_after: string;
  word: string;
  correct: boolean;
  reward: number;
}

export interface History {
  current_level: string;
  cumulative_reward: number;
  records: HistoryRecord[];
}

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.name = "ApiError";
    this.status = status;
    this.code = code;
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class TutorApi {
  private readonly baseUrl: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl = "", fetchImpl?: FetchLike) {
    this.baseUrl = baseUrl;
    this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
  }

  async createSession(studentLabel?: string, seed?: number): Promise<SessionInfo> {
    const body: Record<string, unknown> = {};
    if (studentLabel !== undefined) {
      body.student_label = studentLabel;
    }
    if (seed !== undefined) {
      body.seed = seed;
    }
    return this.request<SessionInfo>("POST", "/v1/sessions", body);
  }

  async getNext(sessionId: string): Promise<Question> {
    return this.request<Question>(
      "GET",
      `/v1/sessions/${encodeURIComponent(sessionId)}/next`,
    );
  }

  async submitAnswer(
    sessionId: string,
    questionId: string,
    text: string,
  ): Promise<AnswerResult> {
    return this.request<AnswerResult>(
      "POST",
      `/v1/sessions/${encodeURIComponent(sessionId)}/answer`,
      { question_id: questionId, text },
    );
  }

  async getHistory(sessionId: string): Promise<History> {
    return this.request<History>(
      "GET",
      `/v1/sessions/${encodeURIComponent(sessionId)}/history`,
    );
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const headers: Record<string, string> = { accept: "application/json" };
    const init: RequestInit = { method, headers };
    if (body !== undefined) {
      headers["content-type"] = "application/json";
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchImpl(this.baseUrl + path, init);
    if (!response.ok) {
      throw await toApiError(response);
    }
    return (await response.json()) as T;
  }
}

async function toApiError(response: Response): Promise<ApiError> {
  let code = "http_error";
  let message = `request failed with status ${response.status}`;
  try {
    const payload: unknown = await response.json();
    if (payload !== null && typeof payload === "object") {
      const record = payload as Record<string, unknown>;
      if (typeof record.code === "string") {
        code = record.code;
      }
      if (typeof record.message === "string") {
        message = record.message;
      }
    }
  } catch {
    // non-JSON error body, keep the generic message
  }
  return new ApiError(response.status, code, message);
}
