// DOM wiring: connects the form controls to ConsoleState and re-renders
// the outcome container whenever state changes. No page reloads anywhere;
// every answer feeds the next query or profile tweak.

import { ApiClient, ApiError } from "./api.js";
import { ConsoleState } from "./state.js";
import {
  renderCompare,
  renderDualRankTable,
  renderError,
  renderLoading,
  renderViolations,
} from "./render.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function fillSelect(select: HTMLSelectElement, names: string[]) {
  select.innerHTML = names.map((n) => `<option value="${n}">${n}</option>`).join("");
}

export function mount(): void {
  const baseUrlInput = el<HTMLInputElement>("base-url");
  let client = new ApiClient(baseUrlInput.value);
  const state = new ConsoleState(client, render);

  const queryInput = el<HTMLInputElement>("query");
  const connectorSelect = el<HTMLSelectElement>("connector");
  const profileSelect = el<HTMLSelectElement>("profile");
  const scorerSelect = el<HTMLSelectElement>("scorer");
  const scorerBSelect = el<HTMLSelectElement>("scorer-b");
  const compareToggle = el<HTMLInputElement>("compare-mode");
  const results = el<HTMLDivElement>("results");

  const editorName = el<HTMLInputElement>("editor-name");
  const editorTarget = el<HTMLTextAreaElement>("editor-target");
  const editorCompetitors = el<HTMLTextAreaElement>("editor-competitors");
  const editorFeedback = el<HTMLDivElement>("editor-feedback");

  function render() {
    switch (state.outcome.kind) {
      case "idle":
        results.innerHTML = `<p class="hint">enter a query to search</p>`;
        break;
      case "loading":
        results.innerHTML = renderLoading();
        break;
      case "rerank":
        results.innerHTML = renderDualRankTable(state.outcome.response);
        break;
      case "compare":
        results.innerHTML = renderCompare(state.outcome.response);
        break;
      case "error":
        results.innerHTML = renderError(state.outcome.error);
        results.querySelector<HTMLButtonElement>(".retry")?.addEventListener("click", () => {
          void state.runSearch();
        });
        break;
    }
    const feedback: string[] = [];
    if (state.editor.violations.length > 0) {
      feedback.push(renderViolations(state.editor.violations));
    }
    if (state.editor.error) {
      feedback.push(`<p class="editor-error">${state.editor.error}</p>`);
    }
    if (state.editor.saved) {
      feedback.push(`<p class="editor-saved">saved profile ${state.editor.saved.name}</p>`);
    }
    editorFeedback.innerHTML = feedback.join("");
  }

  async function refreshCatalog() {
    client = new ApiClient(baseUrlInput.value.replace(/\/$/, ""));
    state.client = client;
    try {
      const [connectors, profiles] = await Promise.all([client.connectors(), client.profiles()]);
      fillSelect(connectorSelect, connectors.map((c) => c.name));
      fillSelect(profileSelect, profiles.map((p) => p.name));
    } catch (err) {
      const error = err instanceof ApiError ? err : new ApiError(0, "error", String(err));
      results.innerHTML = renderError(error);
    }
  }

  el<HTMLButtonElement>("connect").addEventListener("click", () => void refreshCatalog());

  el<HTMLFormElement>("search-form").addEventListener("submit", (event) => {
    event.preventDefault();
    state.query = queryInput.value;
    state.connector = connectorSelect.value;
    state.profile = profileSelect.value;
    state.scorer = scorerSelect.value;
    state.scorerB = scorerBSelect.value;
    state.compareMode = compareToggle.checked;
    void state.runSearch();
  });

  el<HTMLButtonElement>("editor-load").addEventListener("click", () => {
    void state.openEditor(editorName.value).then(() => {
      editorTarget.value = state.editor.target;
      editorCompetitors.value = state.editor.competitors;
    });
  });

  el<HTMLButtonElement>("editor-save").addEventListener("click", () => {
    state.editor.name = editorName.value;
    state.editor.target = editorTarget.value;
    state.editor.competitors = editorCompetitors.value;
    void state.saveProfile().then((saved) => {
      if (saved) {
        void refreshCatalog();
      }
    });
  });

  void refreshCatalog();
  render();
}

mount();
