import type { Granularity, SessionClient } from "./client.js";
import type { SessionConfig, Snapshot } from "./schema.js";

export type PlayState = "stopped" | "playing" | "paused";

export interface ControllerOptions {
  /** auto-play cadence in milliseconds per full step */
  speedMs?: number;
  onSnapshot?: (snapshot: Snapshot) => void;
  onError?: (error: unknown) => void;
  /** injectable scheduler, for tests */
  schedule?: (fn: () => void, ms: number) => unknown;
}

/** Playback state machine over the session protocol.  All mutations go
 *  through the service; the controller never touches snapshots itself. */
export class PlaybackController {
  state: PlayState = "stopped";
  sessionId: string | null = null;
  latest: Snapshot | null = null;
  speedMs: number;

  private readonly onSnapshot: (snapshot: Snapshot) => void;
  private readonly onError: (error: unknown) => void;
  private readonly schedule: (fn: () => void, ms: number) => unknown;
  private epoch = 0; // pause/reset invalidate in-flight ticks

  constructor(
    private readonly client: SessionClient,
    options: ControllerOptions = {},
  ) {
    this.speedMs = options.speedMs ?? 500;
    this.onSnapshot = options.onSnapshot ?? (() => {});
    this.onError = options.onError ?? (() => {});
    this.schedule = options.schedule ?? ((fn, ms) => setTimeout(fn, ms));
  }

  private apply(snapshot: Snapshot): Snapshot {
    this.latest = snapshot;
    this.onSnapshot(snapshot);
    return snapshot;
  }

  private requireSession(): string {
    if (this.sessionId === null) throw new Error("no active session");
    return this.sessionId;
  }

  async reconfigure(config: SessionConfig): Promise<Snapshot> {
    this.epoch++;
    this.state = "stopped";
    const { sessionId, snapshot } = await this.client.createSession(config);
    this.sessionId = sessionId;
    return this.apply(snapshot);
  }

  start(): void {
    const id = this.requireSession();
    if (this.state === "playing") return;
    this.state = "playing";
    const myEpoch = ++this.epoch;
    const tick = async () => {
      if (this.epoch !== myEpoch || this.state !== "playing") return;
      try {
        const snapshot = await this.client.advance(id, "full-step");
        if (this.epoch !== myEpoch || this.state !== "playing") return;
        this.apply(snapshot);
        this.schedule(tick, this.speedMs);
      } catch (err) {
        this.state = "paused";
        this.onError(err);
      }
    };
    this.schedule(tick, this.speedMs);
  }

  pause(): void {
    if (this.state === "playing") {
      this.epoch++;
      this.state = "paused";
    }
  }

  async step(granularity: Granularity = "phase"): Promise<Snapshot> {
    const id = this.requireSession();
    return this.apply(await this.client.advance(id, granularity));
  }

  async reset(): Promise<Snapshot> {
    const id = this.requireSession();
    this.epoch++;
    this.state = "paused";
    return this.apply(await this.client.reset(id));
  }
}
