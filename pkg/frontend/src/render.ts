// Pure view -> scene translation.  The scene is plain data so the contract
// tests can assert on it directly; the DOM adapter in main.ts just draws it.

import type { SessionView } from "./types.js";

export interface NodeSpot {
  id: number;
  x: number;
  y: number;
  isYou: boolean;
}

export interface EdgeSpot {
  a: number;
  b: number;
  selectable: boolean;
}

export interface Scene {
  status: "awaiting_human" | "finished";
  nodes: NodeSpot[];
  edges: EdgeSpot[];
  keepEnabled: boolean;
  secondsLeft: number | null;
  payoffs: number[] | null;
  notice: string | null;
}

/**
 * Fixed circular embedding; when one node has strictly maximal degree
 * (the hub of a ring-star) it sits in the center and the rest circle it.
 * Deterministic: no force simulation, identical input gives identical
 * coordinates.
 */
export function layout(view: SessionView, radius = 100): NodeSpot[] {
  const { n, edges } = view.graph;
  const degree = new Array<number>(n).fill(0);
  for (const [a, b] of edges) {
    degree[a] += 1;
    degree[b] += 1;
  }
  const top = Math.max(...degree);
  const hubs = degree.flatMap((d, i) => (d === top ? [i] : []));
  const hub = hubs.length === 1 && n > 1 ? hubs[0] : null;

  const ring = [...Array(n).keys()].filter((i) => i !== hub);
  const spots: NodeSpot[] = [];
  ring.forEach((id, k) => {
    const angle = (2 * Math.PI * k) / ring.length - Math.PI / 2;
    spots.push({
      id,
      x: radius * Math.cos(angle),
      y: radius * Math.sin(angle),
      isYou: id === view.your_node,
    });
  });
  if (hub !== null) {
    spots.push({ id: hub, x: 0, y: 0, isYou: hub === view.your_node });
  }
  spots.sort((p, q) => p.id - q.id);
  return spots;
}

export function render(view: SessionView): Scene {
  const mine = (e: [number, number]) => e[0] === view.your_node || e[1] === view.your_node;
  const interactive = view.status === "awaiting_human" && view.your_turn;
  return {
    status: view.status,
    nodes: layout(view),
    edges: view.graph.edges.map(([a, b]) => ({
      a,
      b,
      selectable: interactive && mine([a, b]),
    })),
    keepEnabled: interactive,
    secondsLeft: view.seconds_left,
    payoffs: view.payoffs,
    notice: null,
  };
}

/** Guard against malformed payloads: render an error screen, never throw. */
export function renderSafe(view: unknown): Scene {
  try {
    const v = view as SessionView;
    if (!v || typeof v !== "object" || !v.graph || !Array.isArray(v.graph.edges)) {
      throw new Error("malformed view");
    }
    return render(v);
  } catch (err) {
    return {
      status: "finished",
      nodes: [],
      edges: [],
      keepEnabled: false,
      secondsLeft: null,
      payoffs: null,
      notice: `bad server payload: ${String(err)}`,
    };
  }
}
