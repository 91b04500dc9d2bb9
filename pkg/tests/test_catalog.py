import json

import pytest

from favornet.catalog import (
    MalformedJSONError,
    SchemaError,
    UnknownNetworkError,
    catalog,
    catalog_names,
    graph_from_dict,
    graph_to_dict,
    read_graph,
    resolve_network,
    ring_star,
    write_graph,
)
from favornet.equilibrium import classify
from favornet.graph import GraphError, make_graph

RPE_NAMES = {"1R3", "1R4", "1R5", "2R3", "2R4", "3R3"}
SQ_NAMES = {"1R3", "2R3", "3R3"}
LCC_NAMES = {"1R3", "1R4", "1R5"}


class TestRingStar:
    def test_triangle(self):
        g = ring_star(1, 3)
        assert (g.n, g.edge_count) == (3, 3)

    def test_3r3(self):
        g = ring_star(3, 3)
        assert (g.n, g.edge_count) == (7, 9)
        assert g.degree(0) == 6

    def test_2r4(self):
        g = ring_star(2, 4)
        assert (g.n, g.edge_count) == (7, 8)
        assert g.degree(0) == 4

    @pytest.mark.parametrize("x", [1, 2, 3])
    @pytest.mark.parametrize("y", [3, 4, 5])
    def test_closed_forms(self, x, y):
        g = ring_star(x, y)
        assert g.n == x * (y - 1) + 1
        assert g.edge_count == x * y
        assert g.degree(0) == 2 * x

    def test_size_cap(self):
        with pytest.raises(GraphError):
            ring_star(4, 6)

    def test_bad_params(self):
        with pytest.raises(GraphError):
            ring_star(0, 3)
        with pytest.raises(GraphError):
            ring_star(1, 2)


class TestCatalog:
    def test_names(self):
        assert set(catalog_names()) == RPE_NAMES | {"N1R3", "N1R4", "N1R5"}

    def test_1r5_provenance(self):
        entry = catalog("1R5")
        assert entry.provenance == "paper"
        assert classify(entry.graph).is_simple_cycle

    def test_n1r3_reconstructed_and_not_rpe(self):
        entry = catalog("N1R3")
        assert entry.provenance == "reconstructed"
        assert entry.graph.edges == ((0, 1), (0, 2), (1, 2), (1, 3))
        assert not classify(entry.graph, 2).is_tc

    def test_unknown_name_lists_valid(self):
        with pytest.raises(UnknownNetworkError, match="7R9"):
            catalog("7R9")

    def test_taxonomy_reproduced(self):
        for name in catalog_names():
            c = classify(catalog(name).graph, 2)
            assert c.is_tc == (name in RPE_NAMES)
            assert c.is_sq == (name in SQ_NAMES)
            assert c.is_lcc == (name in LCC_NAMES)
        c = classify(catalog("2R4").graph, 2)
        assert c.is_tc and not c.is_sq and not c.is_lcc


class TestGraphIO:
    def test_round_trip(self, tmp_path):
        g = ring_star(2, 3)
        path = tmp_path / "g.json"
        write_graph(g, path)
        assert read_graph(path).mask == g.mask

    def test_unordered_pair_accepted(self):
        g = graph_from_dict({"n": 3, "edges": [[1, 0]]})
        assert g.edges == ((0, 1),)

    def test_out_of_range_schema_error(self):
        with pytest.raises(SchemaError):
            graph_from_dict({"n": 3, "edges": [[0, 3]]})

    def test_malformed_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(MalformedJSONError):
            read_graph(path)

    def test_missing_keys(self):
        with pytest.raises(SchemaError):
            graph_from_dict({"n": 3})

    def test_non_object(self):
        with pytest.raises(SchemaError):
            graph_from_dict([1, 2])

    def test_bad_edge_shape(self):
        with pytest.raises(SchemaError):
            graph_from_dict({"n": 3, "edges": [[0, 1, 2]]})

    def test_io_error(self, tmp_path):
        with pytest.raises(OSError):
            read_graph(tmp_path / "missing.json")

    def test_to_dict_orders_endpoints(self):
        g = make_graph(4, [(3, 1), (2, 0)])
        assert graph_to_dict(g) == {"n": 4, "edges": [[0, 2], [1, 3]]}


class TestResolveNetwork:
    def test_catalog_name(self):
        label, g = resolve_network("2R3")
        assert label == "2R3" and g.edge_count == 6

    def test_file(self, tmp_path):
        path = tmp_path / "tri.json"
        path.write_text(json.dumps({"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]}))
        label, g = resolve_network(str(path))
        assert label == "tri.json" and g.edge_count == 3

    def test_unknown(self):
        with pytest.raises(UnknownNetworkError):
            resolve_network("nope")
