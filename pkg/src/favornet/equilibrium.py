"""Equilibrium taxonomy of favor-exchange networks.

A network sustains cooperation when refusing a favor is never worth it:
whoever breaks a relationship must end up losing at least ``m`` of their
own relationships once the damage settles, where ``m`` is the favor-cost
multiple (``m*b > c > (m-1)*b`` in the payoff calibration; ``m = 2`` is
the standard case).  The networks with this property are the transitively
critical (TC) ones, and being TC is exactly the renegotiation-proof
equilibrium (RPE) condition, so ``is_rpe`` is an alias of ``is_tc``.

The recursion, bottom-up over edge subsets of a base graph:

* the empty network is TC;
* a network ``h`` with ``k`` edges is TC iff for every edge ``ij`` of
  ``h`` and each of its endpoints ``i``, among the dominance-undominated
  TC subnetworks of ``h - ij`` there is some ``g'`` with at most ``k - m``
  edges in which ``i``'s degree dropped by at least ``m``.

"Undominated" compares whole degree profiles (componentwise >=, one
strict), quantified over *all* TC subnetworks of ``h - ij``.

On top of the table sit the refinements used to rank equilibria:

* ``cc_number`` counts how many rounds of "find the largest surviving TC
  subnetwork" it takes to reach the empty network - a proxy for the
  iterative reasoning a player needs to foresee the fallout of a
  deletion.  Largest means maximum edge count; when several candidates
  tie, the maximum cc among them is used (conservative upper bound; see
  CC_TIE_RULE).
* ``is_lcc``: cc == 1, i.e. one deletion collapses everything.
* ``is_social_quilt``: a union of triangles with no simple cycle longer
  than 3 - damage from a deletion stays local.  Defined for m = 2 only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .graph import (
    MAX_ENUM_EDGES,
    Graph,
    GraphError,
    ResourceLimitError,
    edge_index,
    edge_order,
    every_edge_in_triangle,
    is_simple_cycle,
    max_simple_cycle_len,
)

CC_TIE_RULE = "largest = max edge count; ties resolved to the max cc among them"


class CcUndefinedError(ValueError):
    """cc_number is only defined for TC networks (and the empty network)."""


class TcTable:
    """TC status of every spanning subnetwork of a base graph, bottom-up.

    Subnetworks are masks over the base graph's own edge list (bit ``b``
    is ``base.edges[b]``), so the table covers all ``2^|E|`` subsets.
    Tables are immutable once built and safe to share between threads.
    """

    __slots__ = (
        "base", "m", "_ends", "_size", "_degs", "_tc", "_und", "_mt", "_mc", "_cc",
    )

    def __init__(self, base: Graph, m: int = 2) -> None:
        if m < 2:
            raise ValueError(f"favor-cost multiple m must be >= 2, got {m}")
        nedges = base.edge_count
        if nedges > MAX_ENUM_EDGES:
            raise ResourceLimitError(
                f"{nedges} edges exceeds the {MAX_ENUM_EDGES}-edge table cap"
            )
        self.base = base
        self.m = m
        self._ends = base.edges
        self._size = 1 << nedges
        self._build()

    def _build(self) -> None:
        n = self.base.n
        m1 = self.m - 1
        size = self._size
        ends = self._ends

        # Degree vector of every subset, filled in numeric order so the
        # predecessor (mask without its lowest bit) is always ready.
        degs: list[tuple[int, ...]] = [()] * size
        degs[0] = (0,) * n
        for s in range(1, size):
            low = s & (s - 1)
            b = (s & -s).bit_length() - 1
            i, j = ends[b]
            d = list(degs[low])
            d[i] += 1
            d[j] += 1
            degs[s] = tuple(d)

        tc = bytearray(size)
        und: list[tuple[int, ...]] = [()] * size
        mt = [0] * size   # max edge count over TC subnetworks of the mask
        mc = [0] * size   # max cc among TC subnetworks with that edge count
        cc: list[int | None] = [None] * size

        tc[0] = 1
        und[0] = (0,)
        cc[0] = 0

        for s in sorted(range(size), key=int.bit_count):
            if s == 0:
                continue
            pc_s = s.bit_count()

            # TC test: each edge, each endpoint, needs a witness among the
            # undominated TC subnetworks of the graph minus that edge.
            ok = True
            t = s
            while t:
                low = t & -t
                t ^= low
                b = low.bit_length() - 1
                i, j = ends[b]
                child = s ^ low
                dchild = degs[child]
                limit = pc_s - self.m        # max edges allowed in a witness
                need_i = dchild[i] - m1      # i's degree must drop to <= this
                need_j = dchild[j] - m1
                found_i = found_j = False
                for u in und[child]:
                    if u.bit_count() <= limit:
                        du = degs[u]
                        if du[i] <= need_i:
                            found_i = True
                        if du[j] <= need_j:
                            found_j = True
                        if found_i and found_j:
                            break
                if not (found_i and found_j):
                    ok = False
                    break

            # Child aggregates: largest TC subnetwork strictly inside s
            # (every strict subnetwork misses at least one edge).
            best_mt = 0
            best_mc = 0
            cand: set[int] | None = None if ok else set()
            t = s
            while t:
                low = t & -t
                t ^= low
                child = s ^ low
                cmt = mt[child]
                if cmt > best_mt:
                    best_mt = cmt
                    best_mc = mc[child]
                elif cmt == best_mt and mc[child] > best_mc:
                    best_mc = mc[child]
                if cand is not None:
                    cand.update(und[child])

            if ok:
                tc[s] = 1
                und[s] = (s,)
                cc[s] = best_mc + 1
                mt[s] = pc_s
                mc[s] = cc[s]  # type: ignore[assignment]
            else:
                und[s] = _max_by_dominance(cand, degs, n)  # type: ignore[arg-type]
                mt[s] = best_mt
                mc[s] = best_mc

        self._degs = degs
        self._tc = tc
        self._und = und
        self._mt = mt
        self._mc = mc
        self._cc = cc

    # -- mask-level queries -------------------------------------------------

    def status(self, mask: int) -> bool:
        """TC flag of the subnetwork selected by ``mask``."""
        if not 0 <= mask < self._size:
            raise GraphError(f"mask {mask:#x} outside the table's subset range")
        return bool(self._tc[mask])

    def cc_of(self, mask: int) -> int:
        value = self._cc[mask]
        if value is None:
            raise CcUndefinedError("cc is undefined for a non-TC, non-empty network")
        return value

    def undominated(self, mask: int | None = None) -> tuple[int, ...]:
        """Masks of the dominance-maximal TC subnetworks of ``mask``."""
        return self._und[self._size - 1 if mask is None else mask]

    def subgraph(self, mask: int) -> Graph:
        """Materialize a subset mask as a Graph on the base node set."""
        return Graph(self.base.n, _to_canonical_mask(self.base, mask))

    def degrees_of(self, mask: int) -> tuple[int, ...]:
        return self._degs[mask]

    # -- whole-graph views --------------------------------------------------

    @property
    def full_mask(self) -> int:
        return self._size - 1

    @property
    def is_tc(self) -> bool:
        return bool(self._tc[self.full_mask])

    @property
    def cc(self) -> int:
        return self.cc_of(self.full_mask)

    def maximal_tc_subnetworks(self) -> frozenset[Graph]:
        return frozenset(self.subgraph(u) for u in self.undominated())

    def witness(self, node: int, edge: tuple[int, int]) -> Graph | None:
        """The surviving TC subnetwork justifying (node, edge), if TC.

        Among the undominated TC subnetworks of base minus ``edge`` that
        satisfy the edge-count and degree-drop conditions for ``node``,
        returns the one with the most edges (ties: smallest mask).
        """
        pair = (edge[0], edge[1]) if edge[0] < edge[1] else (edge[1], edge[0])
        try:
            b = self._ends.index(pair)
        except ValueError:
            raise GraphError(f"edge {pair} not in base graph") from None
        child = self.full_mask ^ (1 << b)
        limit = self.full_mask.bit_count() - self.m
        need = self._degs[child][node] - (self.m - 1)
        fits = [
            u for u in self._und[child]
            if u.bit_count() <= limit and self._degs[u][node] <= need
        ]
        if not fits:
            return None
        best = min(fits, key=lambda u: (-u.bit_count(), u))
        return self.subgraph(best)


def _max_by_dominance(
    cands: set[int], degs: list[tuple[int, ...]], n: int
) -> tuple[int, ...]:
    """Filter a candidate set down to its dominance-maximal elements.

    A dominator has componentwise >= degrees with one strict, which forces
    strictly more edges, so sorting by edge count descending lets each
    element be checked against already-kept heavier ones only.
    """
    arr = sorted(cands, key=lambda u: (-u.bit_count(), u))
    kept: list[int] = []
    for u in arr:
        du = degs[u]
        pu = u.bit_count()
        dominated = False
        for w in kept:
            if w.bit_count() > pu:
                dw = degs[w]
                if all(dw[v] >= du[v] for v in range(n)):
                    dominated = True
                    break
        if not dominated:
            kept.append(u)
    return tuple(kept)


def _to_canonical_mask(base: Graph, mask: int) -> int:
    full = 0
    index = edge_index(base.n)
    ends = base.edges
    t = mask
    while t:
        low = t & -t
        t ^= low
        full |= 1 << index[ends[low.bit_length() - 1]]
    return full


@lru_cache(maxsize=4096)
def tc_table_for(g: Graph, m: int = 2) -> TcTable:
    """Memoized table per (graph, m); tables are immutable, sharing is safe."""
    return TcTable(g, m)


def build_tc_table(g: Graph, m: int = 2) -> TcTable:
    return tc_table_for(g, m)


def is_tc(g: Graph, m: int = 2) -> bool:
    """True iff the whole graph is transitively critical for multiple m."""
    return tc_table_for(g, m).is_tc


def is_rpe(g: Graph, m: int = 2) -> bool:
    """Renegotiation-proof equilibrium status; identical to TC membership."""
    return is_tc(g, m)


def maximal_tc_subnetworks(g: Graph, m: int = 2) -> frozenset[Graph]:
    """Degree-profile-maximal TC subnetworks of g; never empty.

    The empty network is TC, so when nothing larger survives this returns
    exactly the empty network on g's nodes.
    """
    return tc_table_for(g, m).maximal_tc_subnetworks()


def cc_number(g: Graph, m: int = 2) -> int:
    """Rounds of largest-surviving-TC-subnetwork iteration down to empty."""
    return tc_table_for(g, m).cc


def is_lcc(g: Graph, m: int = 2) -> bool:
    """TC with cc = 1: a single deletion cascades to the empty network."""
    table = tc_table_for(g, m)
    return table.is_tc and g.edge_count > 0 and table.cc == 1


def is_social_quilt(g: Graph) -> bool:
    """Union of triangles with no simple cycle on more than 3 nodes (m=2).

    The empty network qualifies vacuously.
    """
    if g.edge_count > MAX_ENUM_EDGES:
        raise ResourceLimitError(
            f"{g.edge_count} edges exceeds the {MAX_ENUM_EDGES}-edge cap"
        )
    if not every_edge_in_triangle(g):
        return False
    return max_simple_cycle_len(g, stop_at=4) <= 3


@dataclass(frozen=True)
class Classification:
    """Full equilibrium report for one graph at one favor-cost multiple.

    ``cc`` is None for non-TC, non-empty graphs, where the notion is
    undefined.  ``witnesses`` maps (node, incident edge) to the surviving
    TC subnetwork that justifies keeping that edge; populated only for TC
    graphs.  The cc tie rule in force is CC_TIE_RULE.
    """

    graph: Graph
    m: int
    is_tc: bool
    cc: int | None
    is_lcc: bool
    is_sq: bool
    is_simple_cycle: bool
    witnesses: dict[tuple[int, tuple[int, int]], Graph] | None

    @property
    def is_rpe(self) -> bool:
        return self.is_tc

    def to_dict(self, network: str | None = None) -> dict:
        """JSON form: {"network", "m", "rpe", "cc", "lcc", "sq", "simple_cycle"}."""
        label: object = network
        if label is None:
            label = {"n": self.graph.n, "edges": [list(e) for e in self.graph.edges]}
        return {
            "network": label,
            "m": self.m,
            "rpe": self.is_tc,
            "cc": self.cc,
            "lcc": self.is_lcc,
            "sq": self.is_sq,
            "simple_cycle": self.is_simple_cycle,
        }


def classify(g: Graph, m: int = 2) -> Classification:
    """Classify one graph: TC/RPE, cc, LCC, social quilt, simple cycle."""
    table = tc_table_for(g, m)
    tc = table.is_tc
    witnesses = None
    if tc:
        witnesses = {}
        for edge in g.edges:
            for node in edge:
                witnesses[(node, edge)] = table.witness(node, edge)
    return Classification(
        graph=g,
        m=m,
        is_tc=tc,
        cc=table.cc if tc or g.edge_count == 0 else None,
        is_lcc=tc and g.edge_count > 0 and table.cc == 1,
        is_sq=is_social_quilt(g),
        is_simple_cycle=is_simple_cycle(g),
        witnesses=witnesses,
    )


@dataclass(frozen=True)
class ModelParams:
    """Primitives of the favor-exchange model.

    p: per-link favor probability per period; v: favor benefit to the
    receiver; c: favor cost to the giver; delta: discount factor; n:
    agent count.  Requires v > c > 0, 0 < delta < 1 and n(n-1)p <= 1.
    """

    p: float
    v: float
    c: float
    delta: float
    n: int

    def __post_init__(self) -> None:
        if not self.c > 0:
            raise ValueError(f"favor cost must be positive, got {self.c}")
        if not self.v > self.c:
            raise ValueError(f"favor benefit {self.v} must exceed cost {self.c}")
        if not 0 < self.delta < 1:
            raise ValueError(f"discount factor {self.delta} outside (0, 1)")
        if self.p < 0 or self.n < 1:
            raise ValueError("need p >= 0 and n >= 1")
        if self.n * (self.n - 1) * self.p > 1:
            raise ValueError(
                f"n(n-1)p = {self.n * (self.n - 1) * self.p} exceeds 1"
            )


def theoretical_b(params: ModelParams) -> float:
    """Present value of a perpetual relationship: p(v - c) / (1 - delta)."""
    return params.p * (params.v - params.c) / (1 - params.delta)


def in_range_m2(b: float, c: float) -> bool:
    """True iff 2b > c > b, the calibration where the multiple m is 2."""
    return 2 * b > c > b


def in_corner_range(b: float, c: float, h: float) -> bool:
    """True iff 2b > c + h*c > b.

    In the one-shot game a deleter may get a second deletion with some
    small probability h (when turn order hands the last link back), so
    the calibration must keep c + h*c inside the (b, 2b) band.
    """
    return 2 * b > c + h * c > b


def corner_case_bound(b: float, c: float) -> float:
    """Largest h below which in_corner_range(b, c, h) holds, given c > b.

    Equals (2b - c) / c; for the 100/110 calibration this is 9/11.
    """
    if not in_range_m2(b, c):
        raise ValueError(f"need 2b > c > b, got b={b}, c={c}")
    return (2 * b - c) / c


def enumerate_graphs(max_nodes: int) -> Iterator[Graph]:
    """Every labeled simple graph on 1..max_nodes nodes, each exactly once.

    2^C(n,2) graphs per node count; capped at 7 nodes (2^21 at n=7).
    """
    if max_nodes > 7:
        raise ResourceLimitError(f"max_nodes {max_nodes} exceeds the exhaustive cap of 7")
    if max_nodes < 1:
        raise ValueError("max_nodes must be >= 1")
    for n in range(1, max_nodes + 1):
        for mask in range(1 << len(edge_order(n))):
            yield Graph(n, mask)
