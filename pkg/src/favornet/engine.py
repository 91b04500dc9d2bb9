"""Sequential link-deletion game: scheduling, decisions, payoffs, traces.

One node moves at a time and either keeps all of its links or deletes one
of them.  Selection is random but pass-constrained: every node moves once
before anyone moves again.  The game ends when no links remain or when n
consecutive decisions were keeps.  At the end each player scores ``b``
points per surviving incident link plus ``c`` points per link they
deleted themselves.

Players that currently have no links still take turns and their keeps
count toward the terminal counter; the choice is recorded in the trace
metadata so replays carry it.  Wall-clock timeouts live in the session
layer, not here: the engine is deterministic given the seed and agents.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from . import rng as rngmod
from .graph import Graph, GraphError, delete_link
from .rng import SplitMix64, derive_stream


class EngineError(Exception):
    """Base class for game protocol violations."""


class TerminalError(EngineError):
    """The game is over (or not over, where over is required)."""


class OutOfTurnError(EngineError):
    """Decision submitted by a player whose turn it is not."""


class InvalidDecisionError(EngineError):
    """Deleting an edge that is absent or not incident to the player."""


@dataclass(frozen=True)
class Decision:
    action: str  # "keep" | "delete"
    edge: tuple[int, int] | None = None

    @staticmethod
    def keep() -> "Decision":
        return Decision("keep")

    @staticmethod
    def delete(i: int, j: int) -> "Decision":
        return Decision("delete", (i, j) if i < j else (j, i))

    @property
    def is_delete(self) -> bool:
        return self.action == "delete"


@dataclass(frozen=True)
class GameConfig:
    """Game parameters; 2b > c > b is enforced unless explicitly overridden."""

    b: int = 100
    c: int = 110
    seed: int = 0
    decision_timeout: float = 60.0
    allow_out_of_range: bool = False

    def __post_init__(self) -> None:
        if not self.allow_out_of_range and not (2 * self.b > self.c > self.b):
            raise ValueError(
                f"payoffs must satisfy 2b > c > b, got b={self.b}, c={self.c}; "
                "pass allow_out_of_range=True to experiment outside the range"
            )


@dataclass(frozen=True)
class TraceEvent:
    turn: int
    player: int
    action: str
    edge: tuple[int, int] | None
    edges_remaining: int
    consecutive_keeps: int

    def to_json(self) -> str:
        doc: dict = {"turn": self.turn, "player": self.player, "action": self.action}
        if self.edge is not None:
            doc["edge"] = list(self.edge)
        doc["edges_remaining"] = self.edges_remaining
        doc["consecutive_keeps"] = self.consecutive_keeps
        return json.dumps(doc, separators=(",", ":"))


@dataclass
class GameState:
    """Live state of one game.  Single-writer: mutations are not locked."""

    config: GameConfig
    initial_graph: Graph
    graph: Graph
    rng: SplitMix64
    schedule: list[int] = field(default_factory=list)
    position: int = 0
    pending: int | None = None
    consecutive_keeps: int = 0
    deletions: dict[int, list[tuple[int, int]]] = field(default_factory=dict)
    trace: list[TraceEvent] = field(default_factory=list)
    turn: int = 0
    passes_drawn: int = 0
    meta: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def terminal(self) -> bool:
        return self.graph.edge_count == 0 or self.consecutive_keeps >= self.n

    def trace_jsonl(self) -> str:
        return "\n".join(ev.to_json() for ev in self.trace)

    def trace_hash(self) -> str:
        header = json.dumps(
            {
                "n": self.initial_graph.n,
                "edges": [list(e) for e in self.initial_graph.edges],
                "seed": self.config.seed,
                "rng": self.meta.get("rng"),
            },
            separators=(",", ":"),
        )
        payload = header + "\n" + self.trace_jsonl()
        return hashlib.sha256(payload.encode()).hexdigest()


def new_game(g: Graph, cfg: GameConfig) -> GameState:
    """Fresh game on g; the first pass is drawn immediately unless empty."""
    state = GameState(
        config=cfg,
        initial_graph=g,
        graph=g,
        rng=derive_stream(cfg.seed, 0x5C4ED),
        deletions={i: [] for i in range(g.n)},
        meta={
            "rng": rngmod.ALGORITHM,
            "seed": cfg.seed,
            "keep_counter_includes_linkless": True,
        },
    )
    if not state.terminal:
        state.schedule = state.rng.permutation(g.n)
        state.passes_drawn = 1
    return state


def next_player(state: GameState) -> int:
    """Draw the next node to move; a fresh pass is drawn when one runs out."""
    if state.terminal:
        raise TerminalError("game is over; no further turns")
    if state.position >= len(state.schedule):
        state.schedule = state.rng.permutation(state.n)
        state.position = 0
        state.passes_drawn += 1
    player = state.schedule[state.position]
    state.position += 1
    state.pending = player
    return player


def apply_decision(state: GameState, player: int, d: Decision) -> GameState:
    """Apply one decision for the player last drawn by next_player."""
    if state.terminal:
        raise TerminalError("decision submitted to a finished game")
    if state.pending is None or player != state.pending:
        raise OutOfTurnError(
            f"player {player} moved, but the drawn turn belongs to {state.pending}"
        )
    if d.is_delete:
        if d.edge is None or player not in d.edge:
            raise InvalidDecisionError(f"player {player} may only delete own edges, got {d.edge}")
        try:
            state.graph = delete_link(state.graph, d.edge)
        except GraphError as exc:
            raise InvalidDecisionError(str(exc)) from exc
        state.deletions[player].append(d.edge)
        state.consecutive_keeps = 0
    else:
        state.consecutive_keeps += 1
    state.turn += 1
    state.pending = None
    state.trace.append(
        TraceEvent(
            turn=state.turn,
            player=player,
            action=d.action,
            edge=d.edge if d.is_delete else None,
            edges_remaining=state.graph.edge_count,
            consecutive_keeps=state.consecutive_keeps,
        )
    )
    return state


def payoffs(state: GameState) -> tuple[int, ...]:
    """b per surviving incident link plus c per own deletion; terminal only."""
    if not state.terminal:
        raise TerminalError("payoffs are only defined once the game is over")
    deg = state.graph.degrees()
    b, c = state.config.b, state.config.c
    return tuple(b * deg[i] + c * len(state.deletions[i]) for i in range(state.n))


def run_game(g: Graph, cfg: GameConfig, agents) -> GameState:
    """Drive a full game with one agent per node.

    ``agents`` maps node -> policy, where a policy is either a callable
    ``(graph, node) -> Decision`` or an AgentSpec-like object exposing
    ``make_policy(seed, node)`` (bound here with the game seed).  Fully
    deterministic given the seed and deterministic agents.
    """
    if len(agents) != g.n:
        raise ValueError(f"need one agent per node: {len(agents)} agents for {g.n} nodes")
    per_node = [agents[node] for node in range(g.n)]  # sequence or node-keyed mapping
    policies = [
        a.make_policy(cfg.seed, node) if hasattr(a, "make_policy") else a
        for node, a in enumerate(per_node)
    ]
    state = new_game(g, cfg)
    while not state.terminal:
        player = next_player(state)
        decision = policies[player](state.graph, player)
        apply_decision(state, player, decision)
    return state
