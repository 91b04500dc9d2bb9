"""Small undirected simple graphs stored as edge bitmasks.

Nodes are integers ``0..n-1``.  Every possible pair ``(i, j)`` with
``i < j`` gets a fixed bit position (lexicographic order), so a graph is a
node count plus an integer mask.  Graphs built from the same edges in any
input order are bit-identical, spanning subnetworks are submasks, and the
exponential tables built on top of this module key directly on masks.

Caps: at most 16 nodes, and the exhaustive operations refuse graphs with
more than 20 edges.  Everything here is exact; nothing is sampled.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

MAX_NODES = 16
MAX_ENUM_EDGES = 20

DegreeProfile = tuple[int, ...]


class GraphError(ValueError):
    """Invalid graph construction or edge operation."""


class EdgeAbsentError(GraphError):
    """The named edge is not present in the graph."""


class ResourceLimitError(GraphError):
    """The operation would exceed the documented enumeration caps."""


@lru_cache(maxsize=None)
def edge_order(n: int) -> tuple[tuple[int, int], ...]:
    """Canonical edge ordering for n nodes: (i, j), i < j, lexicographic."""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


@lru_cache(maxsize=None)
def edge_index(n: int) -> dict[tuple[int, int], int]:
    """Canonical pair -> bit position mapping for n nodes."""
    return {pair: bit for bit, pair in enumerate(edge_order(n))}


def _norm_pair(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True, order=True)
class Graph:
    """An undirected simple graph on nodes 0..n-1, edges as a bitmask.

    The mask is over the canonical ordering of all possible pairs, so the
    number of set bits equals the number of edges present.
    """

    n: int
    mask: int = 0

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_NODES:
            raise GraphError(f"node count {self.n} outside 1..{MAX_NODES}")
        if self.mask < 0 or self.mask >> len(edge_order(self.n)):
            raise GraphError(f"mask {self.mask:#x} has bits beyond the {self.n}-node edge range")

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        order = edge_order(self.n)
        return tuple(order[b] for b in _bits(self.mask))

    @property
    def edge_count(self) -> int:
        return self.mask.bit_count()

    def degrees(self) -> DegreeProfile:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return tuple(deg)

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in range(self.n) if j != i and self.has_edge(i, j))

    def incident_edges(self, i: int) -> tuple[tuple[int, int], ...]:
        """Edges touching node i, in canonical order."""
        return tuple(e for e in self.edges if i in e)

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        bit = edge_index(self.n).get(_norm_pair(i, j))
        return bit is not None and bool(self.mask >> bit & 1)

    def non_isolated(self) -> tuple[int, ...]:
        seen = set()
        for i, j in self.edges:
            seen.add(i)
            seen.add(j)
        return tuple(sorted(seen))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def make_graph(n: int, edges: list[tuple[int, int]] | tuple[tuple[int, int], ...]) -> Graph:
    """Build a canonical Graph, validating every pair.

    The result is independent of the input order of the pairs.
    """
    if not 1 <= n <= MAX_NODES:
        raise GraphError(f"node count {n} outside 1..{MAX_NODES}")
    index = edge_index(n)
    mask = 0
    for pair in edges:
        i, j = pair
        if i == j:
            raise GraphError(f"self-loop ({i}, {j}) not allowed")
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge ({i}, {j}) has an endpoint outside 0..{n - 1}")
        bit = index[_norm_pair(i, j)]
        if mask >> bit & 1:
            raise GraphError(f"duplicate edge ({i}, {j})")
        mask |= 1 << bit
    return Graph(n, mask)


def delete_link(g: Graph, ij: tuple[int, int]) -> Graph:
    """Remove one edge; all other edges are untouched."""
    i, j = ij
    pair = _norm_pair(i, j)
    bit = edge_index(g.n).get(pair)
    if bit is None or not (g.mask >> bit & 1):
        raise EdgeAbsentError(f"edge {pair} not present in graph")
    return Graph(g.n, g.mask & ~(1 << bit))


def degree_profile(g: Graph) -> DegreeProfile:
    return g.degrees()


def dominates(d1: DegreeProfile, d2: DegreeProfile) -> bool:
    """Componentwise >= with strict inequality in at least one slot."""
    if len(d1) != len(d2):
        raise GraphError(f"profile lengths differ: {len(d1)} vs {len(d2)}")
    ge = all(a >= b for a, b in zip(d1, d2))
    return ge and any(a > b for a, b in zip(d1, d2))


def enumerate_subnetworks(g: Graph) -> Iterator[Graph]:
    """Yield every spanning subnetwork (edge subset over the same nodes).

    2^|E| results in nondecreasing edge count; exponential by nature, so
    graphs above the edge cap are refused.
    """
    if g.edge_count > MAX_ENUM_EDGES:
        raise ResourceLimitError(
            f"{g.edge_count} edges exceeds the {MAX_ENUM_EDGES}-edge enumeration cap"
        )
    bits = list(_bits(g.mask))
    for k in range(len(bits) + 1):
        for combo in combinations(bits, k):
            mask = 0
            for b in combo:
                mask |= 1 << b
            yield Graph(g.n, mask)


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Components as sorted node tuples (isolated nodes are singletons)."""
    seen: set[int] = set()
    comps = []
    adj = _adjacency(g)
    for start in range(g.n):
        if start in seen:
            continue
        stack = [start]
        comp = []
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in _bits(adj[v]):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def _adjacency(g: Graph) -> list[int]:
    adj = [0] * g.n
    for i, j in g.edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return adj


def has_cycle(g: Graph) -> bool:
    """True iff some component carries at least as many edges as nodes."""
    return g.edge_count > g.n - len(connected_components(g))


def is_simple_cycle(g: Graph) -> bool:
    """True iff the non-isolated part is a single cycle of >= 3 nodes.

    Isolated nodes are ignored, so a triangle plus spare nodes counts.
    """
    active = g.non_isolated()
    if len(active) < 3:
        return False
    deg = g.degrees()
    if any(deg[v] != 2 for v in active):
        return False
    comps = [c for c in connected_components(g) if len(c) > 1]
    return len(comps) == 1


def every_edge_in_triangle(g: Graph) -> bool:
    adj = _adjacency(g)
    return all(adj[i] & adj[j] for i, j in g.edges)


def max_simple_cycle_len(g: Graph, stop_at: int | None = None) -> int:
    """Length of the longest simple cycle by exhaustive search (0 if acyclic).

    ``stop_at`` short-circuits: the search returns the first cycle length
    >= stop_at it encounters, which is enough for threshold questions.
    """
    adj = _adjacency(g)
    best = 0
    for anchor in range(g.n):
        if not adj[anchor]:
            continue
        # Enumerate paths anchored at their minimum node; a cycle closes
        # when an edge leads back to the anchor after >= 3 nodes.
        stack: list[tuple[int, int, int]] = [(anchor, 1 << anchor, 1)]
        while stack:
            v, visited, length = stack.pop()
            nbrs = adj[v]
            if length >= 3 and nbrs >> anchor & 1 and length > best:
                best = length
                if stop_at is not None and best >= stop_at:
                    return best
            for w in _bits(nbrs):
                if w > anchor and not (visited >> w & 1):
                    stack.append((w, visited | 1 << w, length + 1))
    return best


@dataclass(frozen=True)
class StructuralFacts:
    has_cycle: bool
    every_edge_in_triangle: bool
    max_simple_cycle_len: int


def structural_facts(g: Graph) -> StructuralFacts:
    """Cycle and triangle facts needed by the equilibrium classifiers."""
    if g.edge_count > MAX_ENUM_EDGES:
        raise ResourceLimitError(
            f"{g.edge_count} edges exceeds the {MAX_ENUM_EDGES}-edge enumeration cap"
        )
    return StructuralFacts(
        has_cycle=has_cycle(g),
        every_edge_in_triangle=every_edge_in_triangle(g),
        max_simple_cycle_len=max_simple_cycle_len(g),
    )
