// Session state machine: applies server views, guards decisions so at most
// one is emitted per turn, and reconciles local countdown expiry with the
// server's authoritative auto-keep.

import { render, renderSafe, type Scene } from "./render.js";
import type {
  CreateSessionRequest,
  DecisionRequest,
  ServiceTransport,
  SessionView,
} from "./types.js";

export class PlayApp {
  private view: SessionView | null = null;
  private sessionId: string | null = null;
  private inFlight = false;
  private decidedTurns = new Set<number>();
  private notice: string | null = null;
  private unsubscribe: (() => void) | null = null;

  constructor(
    private readonly transport: ServiceTransport,
    private readonly onScene: (scene: Scene) => void,
  ) {}

  async start(req: CreateSessionRequest): Promise<void> {
    const view = await this.transport.createSession(req);
    this.sessionId = view.session;
    this.applyView(view);
    this.unsubscribe = this.transport.openEvents(view.session, (v) => this.applyView(v));
  }

  stop(): void {
    this.unsubscribe?.();
    this.unsubscribe = null;
  }

  /** Every push replaces the stale view wholesale; decisions never merge. */
  applyView(view: SessionView): void {
    this.view = view;
    if (view.status === "finished") {
      this.stop();
    }
    this.emit();
  }

  currentScene(): Scene {
    const scene = this.view ? render(this.view) : renderSafe(null);
    scene.notice = this.notice;
    return scene;
  }

  /** One decision per turn: later clicks in the same turn are ignored. */
  private canDecide(): boolean {
    if (!this.view || !this.sessionId || this.inFlight) return false;
    if (this.view.status !== "awaiting_human" || !this.view.your_turn) return false;
    return !this.decidedTurns.has(this.view.your_turn_index);
  }

  async clickKeep(): Promise<void> {
    await this.submit({ action: "keep" });
  }

  async clickEdge(a: number, b: number): Promise<void> {
    const view = this.view;
    if (!view) return;
    const me = view.your_node;
    const present = view.graph.edges.some(
      ([x, y]) => (x === a && y === b) || (x === b && y === a),
    );
    if (!present || (a !== me && b !== me)) return; // not selectable, ignore
    const edge: [number, number] = a < b ? [a, b] : [b, a];
    await this.submit({ action: "delete", edge });
  }

  private async submit(d: DecisionRequest): Promise<void> {
    if (!this.canDecide()) return;
    const turn = this.view!.your_turn_index;
    this.decidedTurns.add(turn);
    this.inFlight = true;
    this.emit(); // controls disabled until the next event
    try {
      const out = await this.transport.submitDecision(this.sessionId!, d);
      if (!out.applied && out.reason === "deadline_expired") {
        this.notice = "auto-keep applied (deadline passed)";
      }
      this.applyView(out.view);
    } catch (err) {
      this.notice = String(err); // surfaced verbatim; view unchanged
    } finally {
      this.inFlight = false;
      this.emit();
    }
  }

  /**
   * Local countdown hit zero: the server clock is authoritative, so ask it
   * what actually happened instead of assuming.  If the server already
   * auto-kept, the fresh view shows the advanced game.
   */
  async countdownExpired(): Promise<void> {
    if (!this.sessionId || this.inFlight) return;
    const before = this.view?.your_turn_index;
    const view = await this.transport.getState(this.sessionId);
    if (
      before !== undefined &&
      (view.your_turn_index !== before || view.status === "finished")
    ) {
      this.notice = "auto-keep applied (deadline passed)";
    }
    this.applyView(view);
  }

  private emit(): void {
    const scene = this.currentScene();
    if (this.inFlight) {
      scene.keepEnabled = false;
      for (const e of scene.edges) e.selectable = false;
    }
    this.onScene(scene);
  }
}
