"""Batch experiment runner and the decision-level cooperation metrics.

Two ratios summarize play.  The delete ratio is the fraction of decisions
that removed a link.  The optimality ratio is the fraction of decisions
whose keep-or-delete class matches what the equilibrium computer player
would have done in the same position; the specific edge deleted does not
matter, only the verdict, mirroring the binary delete coding of the
decision data.

Replications are embarrassingly parallel and merge commutatively, but the
runner is serial: per-run seeds come from the master seed via the
documented derive_seed, so outputs are byte-identical for equal specs.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .agents import build_roster, equilibrium_decision
from .catalog import graph_to_dict, resolve_network
from .engine import GameConfig, GameState, TraceEvent, run_game
from .graph import Graph, delete_link
from .rng import derive_seed

CSV_COLUMNS = ("network", "run", "turn", "player", "action", "optimal", "edges_remaining")


class EmptyTraceError(ValueError):
    """Metrics over zero decisions are undefined."""


@dataclass(frozen=True)
class Trace:
    """A finished game reduced to what the metrics need."""

    initial: Graph
    events: tuple[TraceEvent, ...]
    network: str | None = None
    seed: int | None = None

    @staticmethod
    def from_state(state: GameState, network: str | None = None) -> "Trace":
        return Trace(
            initial=state.initial_graph,
            events=tuple(state.trace),
            network=network,
            seed=state.config.seed,
        )


def _as_traces(traces) -> list[Trace]:
    if isinstance(traces, (Trace, GameState)):
        traces = [traces]
    out = []
    for t in traces:
        out.append(Trace.from_state(t) if isinstance(t, GameState) else t)
    return out


def delete_ratio(traces) -> float:
    """Deletes over decisions, pooled across the given traces."""
    traces = _as_traces(traces)
    total = sum(len(t.events) for t in traces)
    if total == 0:
        raise EmptyTraceError("delete ratio is undefined without decisions")
    deletes = sum(1 for t in traces for ev in t.events if ev.action == "delete")
    return deletes / total


def optimal_flags(trace: Trace, m: int = 2) -> list[bool]:
    """Per decision: does its keep/delete class match the equilibrium verdict?"""
    flags = []
    g = trace.initial
    for ev in trace.events:
        verdict = equilibrium_decision(g, ev.player, m)
        flags.append(verdict.is_delete == (ev.action == "delete"))
        if ev.action == "delete":
            g = delete_link(g, ev.edge)
    return flags


def optimality_ratio(traces, m: int = 2) -> float:
    """Fraction of decisions matching the equilibrium keep/delete verdict."""
    traces = _as_traces(traces)
    flags = [f for t in traces for f in optimal_flags(t, m)]
    if not flags:
        raise EmptyTraceError("optimality ratio is undefined without decisions")
    return sum(flags) / len(flags)


@dataclass(frozen=True)
class BatchSpec:
    """What to run: networks x runs games with a fixed agent roster.

    ``output`` is an optional path; run_batch writes JSON or CSV there by
    file extension.
    """

    networks: tuple[str, ...]
    agents: object  # spec string, AgentSpec, or per-node sequence of either
    runs: int = 1
    seed: int = 0
    m: int = 2
    b: int = 100
    c: int = 110
    keep_traces: bool = False
    output: str | None = None

    def __post_init__(self) -> None:
        if self.runs < 1:
            raise ValueError(f"runs must be >= 1, got {self.runs}")


@dataclass
class NetworkStats:
    runs: int = 0
    decisions: int = 0
    deletes: int = 0
    optimal: int = 0
    final_census: Counter = field(default_factory=Counter)

    @property
    def delete_ratio(self) -> float:
        return self.deletes / self.decisions

    @property
    def optimality_ratio(self) -> float:
        return self.optimal / self.decisions

    def to_dict(self) -> dict:
        return {
            "runs": self.runs,
            "decisions": self.decisions,
            "deletes": self.deletes,
            "delete_ratio": self.delete_ratio,
            "optimality_ratio": self.optimality_ratio,
            "final_census": dict(sorted(self.final_census.items())),
        }


@dataclass
class SimResult:
    spec: BatchSpec
    per_network: dict[str, NetworkStats]
    pooled: NetworkStats
    rows: list[tuple]
    traces: list[Trace] | None = None

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        writer.writerows(self.rows)
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "spec": {
                "networks": list(self.spec.networks),
                "runs": self.spec.runs,
                "seed": self.spec.seed,
                "m": self.spec.m,
            },
            "per_network": {k: v.to_dict() for k, v in self.per_network.items()},
            "pooled": self.pooled.to_dict(),
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def run_batch(spec: BatchSpec) -> SimResult:
    """Run the batch; deterministic (byte-identical outputs) per spec."""
    resolved = [resolve_network(name) for name in spec.networks]
    per_network = {label: NetworkStats() for label, _ in resolved}
    pooled = NetworkStats()
    rows: list[tuple] = []
    kept: list[Trace] = []

    for label, graph in resolved:
        stats = per_network[label]
        for run in range(spec.runs):
            cfg = GameConfig(b=spec.b, c=spec.c, seed=derive_seed(spec.seed, run))
            roster = build_roster(spec.agents, graph.n, cfg.seed)
            state = run_game(graph, cfg, roster)
            trace = Trace.from_state(state, network=label)
            flags = optimal_flags(trace, spec.m)

            stats.runs += 1
            stats.decisions += len(trace.events)
            stats.deletes += sum(1 for ev in trace.events if ev.action == "delete")
            stats.optimal += sum(flags)
            stats.final_census[_census_key(state.graph)] += 1
            for ev, flag in zip(trace.events, flags):
                rows.append(
                    (label, run, ev.turn, ev.player, ev.action, int(flag), ev.edges_remaining)
                )
            if spec.keep_traces:
                kept.append(trace)

    for stats in per_network.values():
        pooled.runs += stats.runs
        pooled.decisions += stats.decisions
        pooled.deletes += stats.deletes
        pooled.optimal += stats.optimal
        pooled.final_census.update(stats.final_census)

    result = SimResult(
        spec=spec,
        per_network=per_network,
        pooled=pooled,
        rows=rows,
        traces=kept if spec.keep_traces else None,
    )
    if spec.output:
        out = Path(spec.output)
        out.write_text(result.to_json() if out.suffix == ".json" else result.to_csv())
    return result


def _census_key(g: Graph) -> str:
    return json.dumps(graph_to_dict(g), separators=(",", ":"))
