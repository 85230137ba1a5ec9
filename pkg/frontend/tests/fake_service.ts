/** In-memory stand-in for the tutor service, speaking the same /v1 wire shapes.
 *
 * The curriculum it runs is deliberately arbitrary (a fixed action script and
 * round-robin word choice): the client must work against any policy, because
 * all of its state comes back from these endpoints. Reward bookkeeping does
 * match the real service (-1 for a correct answer, +1 for an incorrect one)
 * so cumulative numbers behave the same way.
 */
import type { FetchLike, HistoryRecord } from "../src/api.js";

export interface FakeWord {
  word: string;
  level: string;
  synonyms: string[];
  imageRef: string;
}

const LEVELS = ["A1", "A2", "B1", "B2", "C1", "C2"];
const ACTION_SCRIPT = ["Stay", "Up", "Up", "Stay", "Down", "Up"];

interface FakePending {
  questionId: string;
  word: FakeWord;
  levelLabel: string;
}

interface FakeSession {
  id: string;
  levelIndex: number;
  counter: number;
  wordCursor: number;
  pending: FakePending | null;
  records: HistoryRecord[];
  cumulative: number;
}

function json(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

function errorBody(status: number, code: string, message: string): Response {
  return json(status, { code, message });
}

export class FakeService {
  readonly sessions = new Map<string, FakeSession>();
  /** Raw JSON bodies served by the next-question endpoint, for leak checks. */
  readonly nextBodies: string[] = [];
  readonly requestLog: string[] = [];
  unreachable = false;

  private sessionCounter = 0;

  constructor(private readonly words: FakeWord[]) {
    if (words.length === 0) {
      throw new Error("FakeService needs at least one word");
    }
  }

  fetch: FetchLike = async (input, init) => {
    if (this.unreachable) {
      throw new TypeError("fetch failed");
    }
    const method = init?.method ?? "GET";
    const path = input.replace(/^https?:\/\/[^/]+/, "");
    this.requestLog.push(`${method} ${path}`);

    if (method === "POST" && path === "/v1/sessions") {
      return this.createSession();
    }
    const match = /^\/v1\/sessions\/([^/]+)\/(next|answer|history)$/.exec(path);
    if (match === null) {
      return errorBody(404, "not_found", "no such route");
    }
    const session = this.sessions.get(decodeURIComponent(match[1]));
    if (session === undefined) {
      return errorBody(404, "unknown_session", "no such session");
    }
    if (match[2] === "next" && method === "GET") {
      return this.next(session);
    }
    if (match[2] === "answer" && method === "POST") {
      const body = JSON.parse(String(init?.body ?? "{}")) as {
        question_id?: string;
        text?: string;
      };
      return this.answer(session, body.question_id ?? "", body.text ?? "");
    }
    if (match[2] === "history" && method === "GET") {
      return this.history(session);
    }
    return errorBody(404, "not_found", "no such route");
  };

  /** Server-side view of a session's history, for thin-client assertions. */
  historyPayload(sessionId: string): unknown {
    const session = this.sessions.get(sessionId);
    if (session === undefined) {
      throw new Error(`no fake session ${sessionId}`);
    }
    return {
      current_level: LEVELS[session.levelIndex],
      cumulative_reward: session.cumulative,
      records: session.records.map((record) => ({ ...record })),
    };
  }

  /** The word the session is currently being asked about (test-only cheat). */
  pendingWord(sessionId: string): string {
    const pending = this.sessions.get(sessionId)?.pending;
    if (pending === undefined || pending === null) {
      throw new Error(`no pending question for ${sessionId}`);
    }
    return pending.word.word;
  }

  private createSession(): Response {
    this.sessionCounter += 1;
    const id = `fake-${this.sessionCounter.toString().padStart(4, "0")}`;
    this.sessions.set(id, {
      id,
      levelIndex: 0,
      counter: 0,
      wordCursor: 0,
      pending: null,
      records: [],
      cumulative: 0,
    });
    return json(201, {
      session_id: id,
      seed: 1234,
      created_at: "2026-08-18T00:00:00+00:00",
    });
  }

  private next(session: FakeSession): Response {
    if (session.pending === null) {
      const action = ACTION_SCRIPT[session.records.length % ACTION_SCRIPT.length];
      const before = session.levelIndex;
      let after = before;
      if (action === "Up") {
        after = Math.min(before + 1, LEVELS.length - 1);
      } else if (action === "Down") {
        after = Math.max(before - 1, 0);
      }
      session.levelIndex = after;
      const word = this.words[session.wordCursor % this.words.length];
      session.wordCursor += 1;
      session.counter += 1;
      session.pending = {
        questionId: `q-${session.counter.toString().padStart(6, "0")}`,
        word,
        levelLabel: LEVELS[after],
      };
    }
    const body = {
      question_id: session.pending.questionId,
      image_ref: session.pending.word.imageRef,
      level_label: session.pending.levelLabel,
    };
    const response = json(200, body);
    this.nextBodies.push(JSON.stringify(body));
    return response;
  }

  private answer(session: FakeSession, questionId: string, text: string): Response {
    const pending = session.pending;
    if (pending === null || questionId !== pending.questionId) {
      return errorBody(409, "stale_question", "no pending question with that id");
    }
    const normalized = text.trim().toLowerCase();
    const accepted = [pending.word.word, ...pending.word.synonyms];
    const correct = accepted.some((candidate) => candidate.toLowerCase() === normalized);
    const reward = correct ? -1 : 1;
    const actionIndex = (session.counter - 1) % ACTION_SCRIPT.length;
    const levelBeforeIndex =
      session.records.length === 0
        ? 0
        : levelLabelIndex(session.records[session.records.length - 1].level_after);
    session.cumulative += reward;
    session.records.push({
      index: session.counter,
      level_before: LEVELS[levelBeforeIndex],
      level_action: ACTION_SCRIPT[actionIndex],
      level_after: pending.levelLabel,
      word: pending.word.word,
      correct,
      reward,
    });
    session.pending = null;
    const body: Record<string, unknown> = {
      correct,
      accepted_answers_shown: !correct,
      level_label: pending.levelLabel,
      cumulative_reward: session.cumulative,
      interaction_index: session.counter,
    };
    if (!correct) {
      body.target_word = pending.word.word;
      body.accepted_answers = [...accepted].sort();
    }
    return json(200, body);
  }

  private history(session: FakeSession): Response {
    return json(200, this.historyPayload(session.id));
  }
}

function levelLabelIndex(label: string): number {
  const index = LEVELS.indexOf(label);
  if (index < 0) {
    throw new Error(`bad level label in fake: ${label}`);
  }
  return index;
}

export function makeWords(): FakeWord[] {
  const specs: Array<[string, string, string[]]> = [
    ["dog", "A1", ["hound", "puppy"]],
    ["cat", "A1", ["kitty"]],
    ["house", "A1", []],
    ["river", "A2", ["stream"]],
    ["garden", "A2", []],
    ["journey", "B1", ["trip"]],
    ["harvest", "B1", []],
    ["anchor", "B2", []],
    ["horizon", "B2", []],
    ["paradox", "C1", []],
    ["quorum", "C2", []],
    ["zenith", "C2", ["apex"]],
  ];
  return specs.map(([word, level, synonyms], i) => ({
    word,
    level,
    synonyms,
    imageRef: `img/w${(i + 1).toString().padStart(3, "0")}.svg`,
  }));
}
