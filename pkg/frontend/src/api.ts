// Typed client for the re-ranking service JSON API. The console consumes
// exactly these endpoints and nothing else.

export interface ResultRow {
  new_rank: number;
  engine_rank: number;
  score: number;
  url: string;
  title: string;
  snippet: string;
}

export interface RerankResponse {
  results: ResultRow[];
  scoring_mode: string;
  profile: string;
  scorer: string;
}

export interface ComparisonSummary {
  n: number;
  mean_displacement: number;
  kendall_tau: number;
  footrule: number;
  outlier_indices: number[];
}

export interface CompareResponse {
  profile: string;
  scoring_mode: string;
  order_a: RerankResponse;
  order_b: RerankResponse;
  comparison: ComparisonSummary;
}

export interface ConnectorInfo {
  name: string;
  kind: string;
}

export interface ProfileInfo {
  name: string;
  target_size: number;
  competitor_size: number;
}

export interface ProfileRepr {
  name: string;
  target: string[];
  competitors: string[];
}

export interface Violation {
  code: string;
  detail: string;
}

export interface RerankParams {
  connector: string;
  query: string;
  profile: string;
  scorer: string;
  max_results?: number;
  fetch_bodies?: boolean;
}

export interface CompareParams {
  connector: string;
  query: string;
  profile: string;
  scorer_a: string;
  scorer_b: string;
  max_results?: number;
  fetch_bodies?: boolean;
}

/** Error body from the service: stable code, message, maybe violations. */
export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
    public violations: Violation[] = [],
  ) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    public baseUrl: string,
    private fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(this.baseUrl + path, init);
    } catch (err) {
      throw new ApiError(0, "unreachable", `service unreachable: ${String(err)}`);
    }
    const body = await response.json().catch(() => ({}));
    if (!response.ok) {
      throw new ApiError(
        response.status,
        body.code ?? "error",
        body.message ?? response.statusText,
        body.violations ?? [],
      );
    }
    return body as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  health(): Promise<{ status: string }> {
    return this.request("/health");
  }

  connectors(): Promise<ConnectorInfo[]> {
    return this.request("/api/connectors");
  }

  profiles(): Promise<ProfileInfo[]> {
    return this.request("/api/profiles");
  }

  getProfile(name: string): Promise<ProfileRepr> {
    return this.request(`/api/profiles/${encodeURIComponent(name)}`);
  }

  putProfile(name: string, target: string[], competitors: string[]): Promise<ProfileRepr> {
    return this.request(`/api/profiles/${encodeURIComponent(name)}`, {
      method: "PUT",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ target, competitors }),
    });
  }

  rerank(params: RerankParams): Promise<RerankResponse> {
    return this.post("/api/rerank", params);
  }

  compare(params: CompareParams): Promise<CompareResponse> {
    return this.post("/api/compare", params);
  }
}
