// Pure HTML renderers. Every number that appears here is copied verbatim
// from a service response field; the console computes no scores or ranks.
// Keeping these as string -> string functions lets tests assert on the
// rendered table without a browser.

import { ApiError, CompareResponse, RerankResponse, Violation } from "./api.js";

export function escapeHtml(raw: string): string {
  return raw
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderDualRankTable(response: RerankResponse): string {
  const rows = response.results
    .map(
      (row) => `
    <tr class="result-row" data-new-rank="${row.new_rank}" data-engine-rank="${row.engine_rank}"
        data-score="${row.score}" data-url="${escapeHtml(row.url)}">
      <td class="new-rank">${row.new_rank}</td>
      <td class="engine-rank">${row.engine_rank}</td>
      <td class="score">${row.score}</td>
      <td class="result-text">
        <a href="${escapeHtml(row.url)}" target="_blank" rel="noopener">${escapeHtml(row.title) || escapeHtml(row.url)}</a>
        <p>${escapeHtml(row.snippet)}</p>
      </td>
    </tr>`,
    )
    .join("");
  return `
  <p class="result-meta">profile <strong>${escapeHtml(response.profile)}</strong>,
     scorer <strong>${escapeHtml(response.scorer)}</strong>,
     ${escapeHtml(response.scoring_mode)}, ${response.results.length} results</p>
  <table class="rank-table">
    <thead><tr><th>reranked</th><th>engine</th><th>score</th><th>result</th></tr></thead>
    <tbody>${rows}</tbody>
  </table>`;
}

export function renderCompare(response: CompareResponse): string {
  const byUrl = new Map(response.order_b.results.map((row) => [row.url, row]));
  const rows = response.order_a.results
    .map((row) => {
      const other = byUrl.get(row.url);
      const rankB = other ? other.new_rank : "?";
      return `
    <tr class="pair-row" data-rank-a="${row.new_rank}" data-rank-b="${rankB}" data-url="${escapeHtml(row.url)}">
      <td>${row.new_rank}</td>
      <td>${rankB}</td>
      <td class="result-text">
        <a href="${escapeHtml(row.url)}" target="_blank" rel="noopener">${escapeHtml(row.title) || escapeHtml(row.url)}</a>
      </td>
    </tr>`;
    })
    .join("");
  const c = response.comparison;
  return `
  <p class="result-meta">profile <strong>${escapeHtml(response.profile)}</strong>,
     ${escapeHtml(response.order_a.scorer)} vs ${escapeHtml(response.order_b.scorer)}</p>
  <dl class="compare-summary">
    <dt>kendall tau</dt><dd class="tau" data-tau="${c.kendall_tau}">${c.kendall_tau}</dd>
    <dt>mean displacement</dt><dd class="mean-displacement">${c.mean_displacement}</dd>
    <dt>footrule</dt><dd class="footrule">${c.footrule}</dd>
    <dt>outliers</dt><dd class="outliers">${c.outlier_indices.length ? c.outlier_indices.join(", ") : "none"}</dd>
  </dl>
  <table class="rank-table">
    <thead><tr><th>${escapeHtml(response.order_a.scorer)}</th><th>${escapeHtml(response.order_b.scorer)}</th><th>result</th></tr></thead>
    <tbody>${rows}</tbody>
  </table>`;
}

export function renderViolations(violations: Violation[]): string {
  if (violations.length === 0) {
    return "";
  }
  const items = violations
    .map(
      (v) =>
        `<li class="violation" data-code="${escapeHtml(v.code)}">${escapeHtml(v.code)}${
          v.detail ? `: ${escapeHtml(v.detail)}` : ""
        }</li>`,
    )
    .join("");
  return `<ul class="violations">${items}</ul>`;
}

export function renderError(error: ApiError): string {
  return `
  <div class="error-box" data-code="${escapeHtml(error.code)}">
    <strong>request failed</strong> (${escapeHtml(error.code)})
    <p>${escapeHtml(error.message)}</p>
    <button class="retry">retry</button>
  </div>`;
}

export function renderLoading(): string {
  return `<p class="loading">searching&hellip;</p>`;
}
