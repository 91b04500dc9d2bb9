// Wire schemas, mirrored bit for bit from the session service.

export interface GraphDoc {
  n: number;
  edges: [number, number][];
}

export type SessionStatus = "awaiting_human" | "finished";

export interface SessionView {
  session: string;
  status: SessionStatus;
  graph: GraphDoc;
  your_node: number;
  your_turn: boolean;
  your_turn_index: number;
  deadline: number | null;
  seconds_left: number | null;
  history_visibility: "none";
  payoffs: number[] | null;
}

export type DecisionRequest =
  | { action: "keep" }
  | { action: "delete"; edge: [number, number] };

export interface DecisionResponse {
  applied: boolean;
  reason: string | null;
  view: SessionView;
}

export interface CreateSessionRequest {
  network: string | GraphDoc;
  seed?: number;
  human_node?: number;
  timeout?: number;
  randomize_tie?: boolean;
}

/** The transport the app talks through; stubbed in tests. */
export interface ServiceTransport {
  createSession(req: CreateSessionRequest): Promise<SessionView>;
  getState(sessionId: string): Promise<SessionView>;
  submitDecision(sessionId: string, d: DecisionRequest): Promise<DecisionResponse>;
  /** Subscribe to your_turn/finished pushes; returns an unsubscribe. */
  openEvents(sessionId: string, onView: (v: SessionView) => void): () => void;
}
