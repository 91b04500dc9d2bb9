"""Named experiment networks, the ring-star generator, and graph file I/O.

The ring-star family ``xRy`` is ``x`` cycles of length ``y`` all sharing a
single hub node (node 0).  The ``N``-prefixed variants append one pendant
node to node 1 of the corresponding ring; a degree-1 node is the minimal
perturbation that breaks the equilibrium property, but the exact shapes of
the original non-equilibrium networks are not recoverable, so these carry
``provenance="reconstructed"`` and downstream reports must not present
them as canonical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .graph import MAX_NODES, Graph, GraphError, make_graph


class UnknownNetworkError(KeyError):
    """Catalog lookup failed; the message lists the valid names."""


class MalformedJSONError(ValueError):
    """The file is not valid JSON at all."""


class SchemaError(ValueError):
    """Valid JSON, but not a valid graph document."""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    provenance: str  # "paper" for the ring-star family, else "reconstructed"


def ring_star(x: int, y: int) -> Graph:
    """x rings of y nodes sharing hub node 0: x(y-1)+1 nodes, x*y edges."""
    if x < 1 or y < 3:
        raise GraphError(f"ring_star needs x >= 1 rings of size y >= 3, got ({x}, {y})")
    n = x * (y - 1) + 1
    if n > MAX_NODES:
        raise GraphError(f"ring_star({x}, {y}) needs {n} nodes, above the cap of {MAX_NODES}")
    edges = []
    for r in range(x):
        ring = [0] + [1 + r * (y - 1) + t for t in range(y - 1)]
        for a, b in zip(ring, ring[1:]):
            edges.append((a, b))
        edges.append((ring[-1], ring[0]))
    return make_graph(n, edges)


def _pendant_variant(y: int) -> Graph:
    base = ring_star(1, y)
    pendant = base.n
    return make_graph(base.n + 1, list(base.edges) + [(1, pendant)])


def _build_catalog() -> dict[str, CatalogEntry]:
    entries = {}
    for x, y in [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (3, 3)]:
        name = f"{x}R{y}"
        entries[name] = CatalogEntry(name, ring_star(x, y), "paper")
    for y in (3, 4, 5):
        name = f"N1R{y}"
        entries[name] = CatalogEntry(name, _pendant_variant(y), "reconstructed")
    return entries


_CATALOG = _build_catalog()


def catalog_names() -> tuple[str, ...]:
    return tuple(_CATALOG)


def catalog(name: str) -> CatalogEntry:
    try:
        return _CATALOG[name]
    except KeyError:
        raise UnknownNetworkError(
            f"unknown network {name!r}; valid names: {', '.join(_CATALOG)}"
        ) from None


def graph_to_dict(g: Graph) -> dict:
    """The shared JSON shape: {"n": int, "edges": [[i, j], ...]}, i < j."""
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_dict(doc: object) -> Graph:
    """Parse the shared JSON shape; edge order and orientation are free."""
    if not isinstance(doc, dict):
        raise SchemaError(f"expected a JSON object, got {type(doc).__name__}")
    if set(doc) != {"n", "edges"}:
        raise SchemaError(f"expected keys {{'n', 'edges'}}, got {sorted(doc)}")
    n = doc["n"]
    edges = doc["edges"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise SchemaError(f"'n' must be an integer, got {n!r}")
    if not isinstance(edges, list):
        raise SchemaError("'edges' must be a list of pairs")
    pairs = []
    for item in edges:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in item)
        ):
            raise SchemaError(f"edge {item!r} is not a pair of integers")
        pairs.append((item[0], item[1]))
    try:
        return make_graph(n, pairs)
    except GraphError as exc:
        raise SchemaError(str(exc)) from exc


def read_graph(path: str | Path) -> Graph:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedJSONError(f"{path}: {exc}") from exc
    return graph_from_dict(doc)


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(json.dumps(graph_to_dict(g)) + "\n")


def resolve_network(spec: str) -> tuple[str, Graph]:
    """A catalog name, or a path to a graph JSON file; returns (label, graph)."""
    if spec in _CATALOG:
        return spec, _CATALOG[spec].graph
    p = Path(spec)
    if p.exists():
        return p.name, read_graph(p)
    raise UnknownNetworkError(
        f"{spec!r} is neither a catalog name ({', '.join(_CATALOG)}) nor a file"
    )
