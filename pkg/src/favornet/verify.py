"""Exhaustive property suites over small labeled graphs.

TC status, cc, and the structural predicates are all invariant under
adding isolated nodes, and every n-node graph is an edge subset of the
complete graph K_n, so one TC table per (n, m) classifies all 2^C(n,2)
labeled graphs at once.  That makes full verification over n <= 6 cheap.
At n = 7 the complete graph is over the table cap, so the suites check a
seeded spot batch of sparse graphs (plus explicit 7-node cycles, so both
directions of the cycle characterization get exercised) with one table
per graph.

Checked properties, all expected violation-free:

* cycle law (m=2): a graph is LCC iff it is a simple cycle;
* degree law (m in {2,3}): TC nodes have no links or at least m links;
* edge-count law: TC graphs have at least as many edges as linked nodes;
* cycle containment: non-empty TC graphs contain a cycle;
* cycles are equilibria (m=2): every simple cycle is TC;
* quilt corner: LCC and social quilt together happen exactly when the
  non-isolated part is a single triangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .equilibrium import TcTable, is_social_quilt, tc_table_for
from .graph import Graph, edge_order, has_cycle, is_simple_cycle
from .rng import SplitMix64


@lru_cache(maxsize=None)
def complete_table(n: int, m: int) -> TcTable:
    """TC table over the complete graph on n nodes (classifies all masks)."""
    if n > 6:
        raise ValueError("complete-graph tables are limited to n <= 6 (15 edges)")
    full = (1 << len(edge_order(n))) - 1
    return TcTable(Graph(n, full), m)


def _lcc_from_table(table: TcTable, mask: int) -> bool:
    return mask != 0 and table.status(mask) and table.cc_of(mask) == 1


def seven_node_batch(count: int = 200, seed: int = 2024, max_edges: int = 12) -> list[Graph]:
    """Seeded sample of 7-node graphs with <= max_edges edges, plus cycles.

    The cycles are labeled 7-rings (random node orders), included so the
    batch contains positive instances of the cycle law.
    """
    rng = SplitMix64(seed)
    nbits = len(edge_order(7))
    graphs: list[Graph] = []
    seen: set[int] = set()
    while len(graphs) < count:
        mask = rng.next_u64() & ((1 << nbits) - 1)
        # thin dense draws down to the sparse regime instead of rejecting
        while mask.bit_count() > max_edges:
            mask &= rng.next_u64()
        if mask not in seen:
            seen.add(mask)
            graphs.append(Graph(7, mask))
    for _ in range(10):
        ring = rng.permutation(7)
        edges = [(ring[i], ring[(i + 1) % 7]) for i in range(7)]
        mask = 0
        index = {pair: bit for bit, pair in enumerate(edge_order(7))}
        for i, j in edges:
            mask |= 1 << index[(i, j) if i < j else (j, i)]
        if mask not in seen:
            seen.add(mask)
            graphs.append(Graph(7, mask))
    return graphs


@dataclass
class CheckReport:
    name: str
    graphs_checked: int
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def _iter_masks(n: int) -> range:
    return range(1 << len(edge_order(n)))


def check_cycle_law(max_nodes: int = 6, batch: Iterable[Graph] | None = None) -> CheckReport:
    """LCC iff simple cycle, exhaustively for n <= max_nodes plus the batch."""
    violations = []
    checked = 0
    for n in range(1, max_nodes + 1):
        table = complete_table(n, 2)
        for mask in _iter_masks(n):
            g = Graph(n, mask)
            lcc = _lcc_from_table(table, mask)
            cyc = is_simple_cycle(g)
            checked += 1
            if lcc != cyc:
                violations.append(f"n={n} mask={mask:#x}: lcc={lcc} simple_cycle={cyc}")
    for g in batch or ():
        table = tc_table_for(g, 2)
        lcc = table.is_tc and g.edge_count > 0 and table.cc == 1
        cyc = is_simple_cycle(g)
        checked += 1
        if lcc != cyc:
            violations.append(f"batch {g!r}: lcc={lcc} simple_cycle={cyc}")
    return CheckReport("cycle-law", checked, violations)


def check_degree_laws(
    max_nodes: int = 6, ms: tuple[int, ...] = (2, 3), batch: Iterable[Graph] | None = None
) -> CheckReport:
    """Degree, edge-count, and cycle-containment laws for TC graphs."""
    violations = []
    checked = 0

    def probe(g: Graph, tc: bool, m: int) -> None:
        nonlocal checked
        checked += 1
        if not tc:
            return
        deg = g.degrees()
        linked = [d for d in deg if d > 0]
        if any(d < m for d in linked):
            violations.append(f"m={m} {g!r}: TC with a node of degree < {m}")
        if g.edge_count < len(linked):
            violations.append(f"m={m} {g!r}: TC with fewer edges than linked nodes")
        if g.edge_count > 0 and not has_cycle(g):
            violations.append(f"m={m} {g!r}: non-empty TC graph without a cycle")

    for m in ms:
        for n in range(1, max_nodes + 1):
            table = complete_table(n, m)
            for mask in _iter_masks(n):
                probe(Graph(n, mask), table.status(mask), m)
        for g in batch or ():
            probe(g, tc_table_for(g, m).is_tc, m)
    return CheckReport("degree-laws", checked, violations)


def check_cycles_are_tc(max_nodes: int = 6, batch: Iterable[Graph] | None = None) -> CheckReport:
    """Every simple cycle is TC at m = 2."""
    violations = []
    checked = 0
    for n in range(1, max_nodes + 1):
        table = complete_table(n, 2)
        for mask in _iter_masks(n):
            g = Graph(n, mask)
            if is_simple_cycle(g):
                checked += 1
                if not table.status(mask):
                    violations.append(f"{g!r}: simple cycle but not TC")
    for g in batch or ():
        if is_simple_cycle(g):
            checked += 1
            if not tc_table_for(g, 2).is_tc:
                violations.append(f"batch {g!r}: simple cycle but not TC")
    return CheckReport("cycles-are-tc", checked, violations)


def _is_single_triangle(g: Graph) -> bool:
    active = g.non_isolated()
    return len(active) == 3 and g.edge_count == 3 and all(
        g.has_edge(a, b) for a in active for b in active if a < b
    )


def check_quilt_corner(max_nodes: int = 6, batch: Iterable[Graph] | None = None) -> CheckReport:
    """(LCC and SQ) iff the non-isolated part is exactly one triangle."""
    violations = []
    checked = 0

    def probe(g: Graph, lcc: bool) -> None:
        nonlocal checked
        checked += 1
        both = lcc and is_social_quilt(g)
        if both != _is_single_triangle(g):
            violations.append(f"{g!r}: lcc&sq={both} single_triangle={_is_single_triangle(g)}")

    for n in range(1, max_nodes + 1):
        table = complete_table(n, 2)
        for mask in _iter_masks(n):
            probe(Graph(n, mask), _lcc_from_table(table, mask))
    for g in batch or ():
        table = tc_table_for(g, 2)
        probe(g, table.is_tc and g.edge_count > 0 and table.cc == 1)
    return CheckReport("quilt-corner", checked, violations)


def check_lemmas(max_nodes: int = 6, batch: Iterable[Graph] | None = None) -> CheckReport:
    """Degree/edge-count/cycle laws plus cycles-are-TC, as one report."""
    a = check_degree_laws(max_nodes=max_nodes, batch=batch)
    b = check_cycles_are_tc(max_nodes=max_nodes, batch=batch)
    return CheckReport("lemmas", a.graphs_checked + b.graphs_checked, a.violations + b.violations)


CHECKS = {
    "prop3": check_cycle_law,
    "lemmas": check_lemmas,
    "cor1": check_quilt_corner,
}


def run_checks(
    names: Iterable[str], max_nodes: int = 6, with_batch: bool = True
) -> list[CheckReport]:
    batch = seven_node_batch() if with_batch else None
    reports = []
    for name in names:
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}; choose from {sorted(CHECKS)}")
        reports.append(CHECKS[name](max_nodes=max_nodes, batch=batch))
    return reports
