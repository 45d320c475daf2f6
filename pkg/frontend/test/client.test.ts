import { describe, expect, it } from "vitest";

import { ServiceError, SessionClient } from "../src/client.js";
import { makeSnapshot } from "./fixtures.js";

function fakeFetch(handler: (url: string, init?: RequestInit) => { status?: number; body: unknown }) {
  const calls: Array<{ url: string; init?: RequestInit }> = [];
  const impl = async (url: string, init?: RequestInit): Promise<Response> => {
    calls.push({ url, init });
    const { status = 200, body } = handler(url, init);
    return new Response(JSON.stringify(body), {
      status,
      headers: { "content-type": "application/json" },
    });
  };
  return { impl, calls };
}

describe("SessionClient", () => {
  it("creates a session and validates the snapshot", async () => {
    const { impl, calls } = fakeFetch(() => ({
      body: { session_id: "abc", snapshot: makeSnapshot() },
    }));
    const client = new SessionClient("http://svc", impl);
    const { sessionId, snapshot } = await client.createSession({ population_size: 5 });
    expect(sessionId).toBe("abc");
    expect(snapshot.phase).toBe("idle");
    expect(calls[0].url).toBe("http://svc/sessions");
    expect(calls[0].init?.method).toBe("POST");
    expect(JSON.parse(String(calls[0].init?.body))).toEqual({ population_size: 5 });
  });

  it("passes granularity through to advance", async () => {
    const { impl, calls } = fakeFetch(() => ({ body: makeSnapshot({ phase: "mutate", step: 1 }) }));
    const client = new SessionClient("http://svc", impl);
    const snap = await client.advance("abc", "full-step");
    expect(snap.step).toBe(1);
    expect(calls[0].url).toBe("http://svc/sessions/abc/advance?granularity=full-step");
  });

  it("hits the reset and snapshot endpoints", async () => {
    const { impl, calls } = fakeFetch(() => ({ body: makeSnapshot() }));
    const client = new SessionClient("http://svc", impl);
    await client.reset("abc");
    await client.snapshot("abc");
    expect(calls.map((c) => c.url)).toEqual([
      "http://svc/sessions/abc/reset",
      "http://svc/sessions/abc",
    ]);
    expect(calls[1].init?.method).toBeUndefined();
  });

  it("surfaces http errors with status and detail", async () => {
    const { impl } = fakeFetch(() => ({ status: 404, body: { detail: "unknown session" } }));
    const client = new SessionClient("http://svc", impl);
    await expect(client.snapshot("zzz")).rejects.toThrow(ServiceError);
    await expect(client.snapshot("zzz")).rejects.toThrow(/404/);
  });

  it("rejects stale snapshots from the wire", async () => {
    const { impl } = fakeFetch(() => ({ body: { ...makeSnapshot(), schema_version: 99 } }));
    const client = new SessionClient("http://svc", impl);
    await expect(client.snapshot("abc")).rejects.toThrow(/schema version/);
  });
});
