// End-to-end: a real service process on a fixture connector, driven through
// the console's client/state/render stack. Requires the Python package to be
// installed (pip install -e .. from the repo root).

import { ChildProcess, spawn } from "node:child_process";
import { mkdtempSync, mkdirSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient, ApiError, RerankResponse } from "../src/api.js";
import { ConsoleState } from "../src/state.js";
import { renderCompare, renderDualRankTable, renderViolations } from "../src/render.js";

const PORT = 8800 + (process.pid % 800);
const BASE = `http://127.0.0.1:${PORT}`;

const SNIPPETS = [
  "mars mars star dust in deep space",
  "the rover rover crossed the crater",
  "star light over a quiet hill",
  "mars rock samples and the red planet",
  "gardening tips for the spring",
  "mars mars mars probe telemetry",
  "a rover a rover and a star",
  "red planet dust storms seen from orbit",
  "cooking with dust covered pans",
  "star star mars and one rover",
];

let workdir: string;
let server: ChildProcess;

function writeWorkspace(): void {
  workdir = mkdtempSync(join(tmpdir(), "interank-console-"));
  const profiles = join(workdir, "profiles");
  mkdirSync(profiles);
  writeFileSync(join(profiles, "stopwords"), "the\na\nand\nin\nfor\nof\n");
  writeFileSync(join(profiles, "space.target"), "mars\nstar\nred planet\n");
  writeFileSync(join(profiles, "space.competitor"), "rover\n");

  const lines = [JSON.stringify({ query: "mars", engine: "testbed", recorded_at: "2026-01-01T00:00:00Z" })];
  SNIPPETS.forEach((snippet, i) => {
    lines.push(
      JSON.stringify({
        id: `r${i}`,
        rank: i + 1,
        url: `https://example.org/space/${i}`,
        title: `Result ${i}`,
        snippet,
        body: "",
      }),
    );
  });
  writeFileSync(join(workdir, "space.jsonl"), lines.join("\n") + "\n");
  writeFileSync(
    join(workdir, "connectors.json"),
    JSON.stringify({ replay: { kind: "fixture", path: "space.jsonl" } }),
  );
}

async function waitForHealth(): Promise<void> {
  for (let attempt = 0; attempt < 60; attempt += 1) {
    try {
      const response = await fetch(`${BASE}/health`);
      if (response.ok) {
        return;
      }
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
  throw new Error(`service did not come up on ${BASE}`);
}

beforeAll(async () => {
  writeWorkspace();
  server = spawn(
    "python3",
    [
      "-m", "interank.cli",
      "--profiles-dir", join(workdir, "profiles"),
      "--connectors-config", join(workdir, "connectors.json"),
      "serve", "--port", String(PORT),
    ],
    { stdio: "ignore" },
  );
  await waitForHealth();
}, 30_000);

afterAll(() => {
  server?.kill();
  rmSync(workdir, { recursive: true, force: true });
});

function searchParams(state: ConsoleState): void {
  state.query = "mars";
  state.connector = "replay";
  state.profile = "space";
  state.scorer = "mm";
  state.scorerB = "tfidf";
}

describe("console loop against the live service", () => {
  it("renders the dual-rank table with every row matching the rerank response", async () => {
    const client = new ApiClient(BASE);
    const state = new ConsoleState(client);
    searchParams(state);
    await state.runSearch();

    expect(state.outcome.kind).toBe("rerank");
    const response = (state.outcome as { kind: "rerank"; response: RerankResponse }).response;

    // independent request for the same parameters: the reference truth
    const reference = await client.rerank({
      connector: "replay",
      query: "mars",
      profile: "space",
      scorer: "mm",
      max_results: 100,
    });
    expect(response).toEqual(reference);

    const html = renderDualRankTable(response);
    const rowPattern =
      /data-new-rank="(\d+)" data-engine-rank="(\d+)"\s+data-score="([^"]+)" data-url="([^"]+)"/g;
    const rendered = [...html.matchAll(rowPattern)].map((m) => ({
      new_rank: Number(m[1]),
      engine_rank: Number(m[2]),
      score: m[3],
      url: m[4],
    }));
    expect(rendered).toHaveLength(reference.results.length);
    reference.results.forEach((row, i) => {
      expect(rendered[i].new_rank).toBe(row.new_rank);
      expect(rendered[i].engine_rank).toBe(row.engine_rank);
      expect(rendered[i].score).toBe(String(row.score));
      expect(rendered[i].url).toBe(row.url);
    });
    // reranked output is a permutation: new ranks 1..n, engine ranks 1..n
    expect(rendered.map((r) => r.new_rank)).toEqual(reference.results.map((_, i) => i + 1));
    expect([...rendered.map((r) => r.engine_rank)].sort((a, b) => a - b)).toEqual(
      reference.results.map((_, i) => i + 1),
    );
  });

  it("blocks an overlapping profile edit and shows the violation inline", async () => {
    const client = new ApiClient(BASE);
    const state = new ConsoleState(client);
    await state.openEditor("space");
    expect(state.editor.target).toContain("mars");

    // introduce a target/competitor overlap and try to save
    state.editor.competitors = state.editor.competitors + "\nmars";
    const saved = await state.saveProfile();
    expect(saved).toBe(false);
    expect(state.editor.saved).toBeNull();
    expect(state.editor.violations.some((v) => v.code === "OverlapViolation")).toBe(true);

    const html = renderViolations(state.editor.violations);
    expect(html).toContain("OverlapViolation");
    expect(html).toContain("mars");

    // the stored profile is untouched, so the overlap never persisted
    const stored = await client.getProfile("space");
    expect(stored.competitors).toEqual(["rover"]);
  });

  it("renders compare mode with tau equal to the compare summary", async () => {
    const client = new ApiClient(BASE);
    const state = new ConsoleState(client);
    searchParams(state);
    state.compareMode = true;
    await state.runSearch();

    expect(state.outcome.kind).toBe("compare");
    const outcome = state.outcome as { kind: "compare"; response: import("../src/api.js").CompareResponse };

    const reference = await client.compare({
      connector: "replay",
      query: "mars",
      profile: "space",
      scorer_a: "mm",
      scorer_b: "tfidf",
      max_results: 100,
    });
    expect(outcome.response.comparison).toEqual(reference.comparison);

    const html = renderCompare(outcome.response);
    expect(html).toContain(`data-tau="${reference.comparison.kendall_tau}"`);
    expect(html).toContain(String(reference.comparison.kendall_tau));
  });

  it("surfaces service errors with their machine-readable code", async () => {
    const client = new ApiClient(BASE);
    const state = new ConsoleState(client);
    searchParams(state);
    state.profile = "ghost";
    await state.runSearch();
    expect(state.outcome.kind).toBe("error");
    const error = (state.outcome as { kind: "error"; error: ApiError }).error;
    expect(error.status).toBe(404);
    expect(error.code).toBe("unknown_profile");
  });
});
