// Console state: what the user asked for, what the service answered, and
// the profile editor buffer. All numbers shown in the UI live inside the
// service responses stored here; the console never derives its own.

import {
  ApiClient,
  ApiError,
  CompareResponse,
  ProfileRepr,
  RerankResponse,
  Violation,
} from "./api.js";

export type Outcome =
  | { kind: "idle" }
  | { kind: "loading" }
  | { kind: "rerank"; response: RerankResponse }
  | { kind: "compare"; response: CompareResponse }
  | { kind: "error"; error: ApiError };

export interface EditorState {
  name: string;
  target: string;
  competitors: string;
  violations: Violation[];
  saved: ProfileRepr | null;
  error: string | null;
}

function emptyEditor(): EditorState {
  return { name: "", target: "", competitors: "", violations: [], saved: null, error: null };
}

export class ConsoleState {
  query = "";
  connector = "";
  profile = "";
  scorer = "mm";
  scorerB = "tfidf";
  compareMode = false;
  maxResults = 100;

  outcome: Outcome = { kind: "idle" };
  editor: EditorState = emptyEditor();

  // bumped on every search; responses from older searches are dropped
  private searchSeq = 0;

  constructor(
    public client: ApiClient,
    private onChange: () => void = () => {},
  ) {}

  /** Run the current query; a newer call silently cancels this one's rendering. */
  async runSearch(): Promise<void> {
    const mine = ++this.searchSeq;
    this.outcome = { kind: "loading" };
    this.onChange();

    let next: Outcome;
    try {
      if (this.compareMode) {
        const response = await this.client.compare({
          connector: this.connector,
          query: this.query,
          profile: this.profile,
          scorer_a: this.scorer,
          scorer_b: this.scorerB,
          max_results: this.maxResults,
        });
        next = { kind: "compare", response };
      } else {
        const response = await this.client.rerank({
          connector: this.connector,
          query: this.query,
          profile: this.profile,
          scorer: this.scorer,
          max_results: this.maxResults,
        });
        next = { kind: "rerank", response };
      }
    } catch (err) {
      const error = err instanceof ApiError ? err : new ApiError(0, "error", String(err));
      next = { kind: "error", error };
    }

    if (mine !== this.searchSeq) {
      return; // a newer search owns the view now
    }
    this.outcome = next;
    this.onChange();
  }

  async openEditor(name: string): Promise<void> {
    this.editor = { ...emptyEditor(), name };
    if (name) {
      try {
        const existing = await this.client.getProfile(name);
        this.editor.target = existing.target.join("\n");
        this.editor.competitors = existing.competitors.join("\n");
      } catch (err) {
        // a 404 just means the user is creating a new profile
        if (!(err instanceof ApiError && err.status === 404)) {
          this.editor.error = String(err);
        }
      }
    }
    this.onChange();
  }

  /** Save the editor buffer; violations block the save and stay on screen. */
  async saveProfile(): Promise<boolean> {
    const target = this.editor.target.split("\n").filter((line) => line.trim() !== "");
    const competitors = this.editor.competitors.split("\n").filter((line) => line.trim() !== "");
    this.editor.violations = [];
    this.editor.error = null;
    this.editor.saved = null;
    try {
      this.editor.saved = await this.client.putProfile(this.editor.name, target, competitors);
      this.onChange();
      return true;
    } catch (err) {
      if (err instanceof ApiError && err.violations.length > 0) {
        this.editor.violations = err.violations;
      } else {
        this.editor.error = err instanceof Error ? err.message : String(err);
      }
      this.onChange();
      return false;
    }
  }
}
