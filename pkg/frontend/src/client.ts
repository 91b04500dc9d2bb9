// HTTP + server-sent-events transport for the session service.

import type {
  CreateSessionRequest,
  DecisionRequest,
  DecisionResponse,
  ServiceTransport,
  SessionView,
} from "./types.js";

async function asJson<T>(resp: Response): Promise<T> {
  if (!resp.ok) {
    let detail = `HTTP ${resp.status}`;
    try {
      const body = (await resp.json()) as { error?: string };
      if (body.error) detail = body.error;
    } catch {
      // non-JSON error body; keep the status line
    }
    throw new Error(detail);
  }
  return (await resp.json()) as T;
}

export class HttpTransport implements ServiceTransport {
  constructor(private readonly base: string = "") {}

  async createSession(req: CreateSessionRequest): Promise<SessionView> {
    const resp = await fetch(`${this.base}/sessions`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(req),
    });
    return asJson<SessionView>(resp);
  }

  async getState(sessionId: string): Promise<SessionView> {
    return asJson<SessionView>(await fetch(`${this.base}/sessions/${sessionId}`));
  }

  async submitDecision(sessionId: string, d: DecisionRequest): Promise<DecisionResponse> {
    const resp = await fetch(`${this.base}/sessions/${sessionId}/decision`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(d),
    });
    return asJson<DecisionResponse>(resp);
  }

  openEvents(sessionId: string, onView: (v: SessionView) => void): () => void {
    const source = new EventSource(`${this.base}/sessions/${sessionId}/events`);
    const handler = (ev: MessageEvent) => onView(JSON.parse(ev.data) as SessionView);
    source.addEventListener("your_turn", handler);
    source.addEventListener("finished", handler);
    return () => source.close();
  }
}
