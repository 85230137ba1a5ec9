/** Browser entry point: binds the controller to the static page. */
import { TutorApi } from "./api.js";
import type { AnswerResult, History, Question } from "./api.js";
import { Controller } from "./controller.js";
import { levelChartSvg, rewardChartSvg } from "./charts.js";
import type { View } from "./controller.js";

const FALLBACK_IMAGE =
  "data:image/svg+xml," +
  encodeURIComponent(
    '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 200 140">' +
      '<rect width="200" height="140" fill="#d8d8d8"/>' +
      '<text x="100" y="74" text-anchor="middle" font-family="sans-serif" ' +
      'font-size="12" fill="#555555">image unavailable</text></svg>',
  );

function element<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing element: ${id}`);
  }
  return node as T;
}

const imageEl = element<HTMLImageElement>("question-image");
const levelEl = element<HTMLElement>("question-level");
const answerInput = element<HTMLInputElement>("answer-input");
const submitButton = element<HTMLButtonElement>("answer-submit");
const feedbackEl = element<HTMLElement>("feedback");
const errorEl = element<HTMLElement>("error");
const errorTextEl = element<HTMLElement>("error-text");
const retryButton = element<HTMLButtonElement>("retry");
const statsEl = element<HTMLElement>("stats");
const levelChartEl = element<HTMLElement>("level-chart");
const rewardChartEl = element<HTMLElement>("reward-chart");

imageEl.addEventListener("error", () => {
  if (imageEl.src !== FALLBACK_IMAGE) {
    imageEl.src = FALLBACK_IMAGE;
  }
});

const view: View = {
  showQuestion(question: Question): void {
    imageEl.src = "/" + question.image_ref;
    levelEl.textContent = question.level_label;
    errorEl.hidden = true;
    answerInput.value = "";
  },

  showFeedback(result: AnswerResult): void {
    if (result.correct) {
      feedbackEl.textContent = "Correct!";
      feedbackEl.className = "feedback good";
    } else {
      const accepted = (result.accepted_answers ?? []).join(", ");
      const target = result.target_word ?? "?";
      feedbackEl.textContent =
        accepted === "" || accepted === target
          ? `Not quite. The word was "${target}".`
          : `Not quite. The word was "${target}" (also accepted: ${accepted}).`;
      feedbackEl.className = "feedback bad";
    }
  },

  showCharts(history: History): void {
    levelChartEl.innerHTML = levelChartSvg(history.records);
    rewardChartEl.innerHTML = rewardChartSvg(history.records);
    const count = history.records.length;
    statsEl.textContent =
      `level ${history.current_level} · ${count} answered · ` +
      `cumulative reward ${history.cumulative_reward}`;
  },

  showError(message: string): void {
    errorEl.hidden = false;
    errorTextEl.textContent = message;
  },

  setBusy(busy: boolean): void {
    answerInput.disabled = busy;
    submitButton.disabled = busy;
    retryButton.disabled = busy;
    if (!busy) {
      answerInput.focus();
    }
  },
};

const controller = new Controller(new TutorApi(""), view, window.localStorage);

submitButton.addEventListener("click", () => {
  void controller.answer(answerInput.value);
});

answerInput.addEventListener("keydown", (event) => {
  if (event.key === "Enter" && !answerInput.disabled) {
    event.preventDefault();
    void controller.answer(answerInput.value);
  }
});

retryButton.addEventListener("click", () => {
  void controller.retry();
});

void controller.start();
