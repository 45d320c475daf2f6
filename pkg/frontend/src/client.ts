import { parseSnapshot, type SessionConfig, type Snapshot } from "./schema.js";

export type Granularity = "phase" | "full-step";

export interface CreateResult {
  sessionId: string;
  snapshot: Snapshot;
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ServiceError extends Error {
  constructor(
    public readonly status: number,
    detail: string,
  ) {
    super(`service error ${status}: ${detail}`);
    this.name = "ServiceError";
  }
}

export class SessionClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (...args) => fetch(...args),
  ) {}

  private async request(path: string, init?: RequestInit): Promise<unknown> {
    const resp = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    if (!resp.ok) {
      throw new ServiceError(resp.status, await resp.text());
    }
    return resp.json();
  }

  async createSession(config: SessionConfig): Promise<CreateResult> {
    const data = (await this.request("/sessions", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(config),
    })) as { session_id: string; snapshot: unknown };
    return { sessionId: data.session_id, snapshot: parseSnapshot(data.snapshot) };
  }

  async advance(sessionId: string, granularity: Granularity = "phase"): Promise<Snapshot> {
    const raw = await this.request(
      `/sessions/${sessionId}/advance?granularity=${granularity}`,
      { method: "POST" },
    );
    return parseSnapshot(raw);
  }

  async reset(sessionId: string): Promise<Snapshot> {
    return parseSnapshot(await this.request(`/sessions/${sessionId}/reset`, { method: "POST" }));
  }

  async snapshot(sessionId: string): Promise<Snapshot> {
    return parseSnapshot(await this.request(`/sessions/${sessionId}`));
  }
}
