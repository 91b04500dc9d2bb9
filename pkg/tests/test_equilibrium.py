import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from favornet.catalog import catalog, ring_star
from favornet.equilibrium import (
    CcUndefinedError,
    Classification,
    ModelParams,
    build_tc_table,
    cc_number,
    classify,
    enumerate_graphs,
    in_range_m2,
    is_lcc,
    is_rpe,
    is_social_quilt,
    is_tc,
    maximal_tc_subnetworks,
    theoretical_b,
)
from favornet.graph import Graph, ResourceLimitError, delete_link, dominates, make_graph

from oracle import cc_oracle, maximal_tc_oracle, norm_edges, tc_oracle

TRIANGLE = make_graph(3, [(0, 1), (1, 2), (0, 2)])
SQUARE = make_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
TWO_TRIANGLES = make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


class TestTcTable:
    def test_triangle_only_trivial_subsets_tc(self):
        table = build_tc_table(TRIANGLE, 2)
        flags = {mask: table.status(mask) for mask in range(8)}
        assert flags == {0: True, 1: False, 2: False, 3: False,
                         4: False, 5: False, 6: False, 7: True}

    def test_single_edge_not_tc(self):
        assert not is_tc(make_graph(2, [(0, 1)]), 2)

    def test_five_cycle_fails_m3(self):
        assert not is_tc(ring_star(1, 5), 3)
        assert is_tc(ring_star(1, 5), 2)

    def test_empty_always_tc(self):
        for m in (2, 3, 4):
            assert is_tc(Graph(5, 0), m)

    def test_m_below_two_rejected(self):
        with pytest.raises(ValueError):
            build_tc_table(TRIANGLE, 1)

    def test_edge_cap(self):
        k7 = make_graph(7, [(i, j) for i in range(7) for j in range(i + 1, 7)])
        with pytest.raises(ResourceLimitError):
            build_tc_table(k7, 2)

    @given(st.integers(0, 2**6 - 1), st.sampled_from([2, 3]))
    @settings(max_examples=60, deadline=None)
    def test_matches_bruteforce_oracle(self, mask, m):
        g = Graph(4, mask)
        assert is_tc(g, m) == tc_oracle(g.n, norm_edges(g.edges), m)


class TestIsTc:
    def test_2r4_is_rpe(self):
        assert is_tc(catalog("2R4").graph, 2)

    def test_1r4_is_rpe(self):
        assert is_tc(SQUARE, 2)

    def test_four_cycle_plus_pendant_is_not(self):
        g = make_graph(5, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 4)])
        assert not is_tc(g, 2)
        assert not tc_oracle(g.n, norm_edges(g.edges), 2)

    def test_is_rpe_alias(self):
        assert is_rpe(TRIANGLE) == is_tc(TRIANGLE)


class TestMaximalTcSubnetworks:
    def test_path_collapses_to_empty(self):
        path = make_graph(3, [(0, 1), (1, 2)])
        assert maximal_tc_subnetworks(path, 2) == frozenset({Graph(3, 0)})

    def test_2r3_minus_peripheral_edge(self):
        g = delete_link(catalog("2R3").graph, (1, 2))
        expected = make_graph(5, [(0, 3), (0, 4), (3, 4)])  # from the brute-force oracle
        assert maximal_tc_subnetworks(g, 2) == frozenset({expected})

    def test_2r4_minus_ring_edge(self):
        g = delete_link(catalog("2R4").graph, (1, 2))
        expected = make_graph(7, [(0, 4), (0, 6), (4, 5), (5, 6)])  # oracle-derived
        assert maximal_tc_subnetworks(g, 2) == frozenset({expected})

    @given(st.integers(0, 2**6 - 1))
    @settings(max_examples=40, deadline=None)
    def test_oracle_agreement_and_soundness(self, mask):
        g = Graph(4, mask)
        ours = maximal_tc_subnetworks(g, 2)
        assert ours  # never empty: the empty network is always TC
        theirs = maximal_tc_oracle(g.n, norm_edges(g.edges), 2)
        assert {norm_edges(h.edges) for h in ours} == theirs
        for h in ours:
            assert h.mask & g.mask == h.mask
            assert is_tc(h, 2)
        profiles = [h.degrees() for h in ours]
        for a in profiles:
            for b in profiles:
                assert not dominates(a, b)


class TestCcNumber:
    def test_empty_is_zero(self):
        assert cc_number(Graph(3, 0)) == 0

    def test_single_rings_are_one(self):
        for y in (3, 4, 5):
            assert cc_number(ring_star(1, y)) == 1

    def test_3r3_is_three(self):
        assert cc_number(catalog("3R3").graph) == 3

    def test_undefined_for_non_tc(self):
        with pytest.raises(CcUndefinedError):
            cc_number(make_graph(2, [(0, 1)]))

    @pytest.mark.parametrize(
        "name,expected", [("1R3", 1), ("1R4", 1), ("1R5", 1), ("2R3", 2), ("2R4", 2), ("3R3", 3)]
    )
    def test_catalog_cc_matches_oracle(self, name, expected):
        g = catalog(name).graph
        assert cc_number(g, 2) == expected
        assert cc_oracle(g.n, norm_edges(g.edges), 2) == expected


class TestLcc:
    def test_square_is_lcc(self):
        assert is_lcc(SQUARE, 2)

    def test_2r3_is_not(self):
        assert not is_lcc(catalog("2R3").graph, 2)

    def test_two_disjoint_triangles_are_not(self):
        assert is_tc(TWO_TRIANGLES, 2)
        assert not is_lcc(TWO_TRIANGLES, 2)
        assert cc_number(TWO_TRIANGLES, 2) == 2

    def test_empty_is_not_lcc(self):
        assert not is_lcc(Graph(3, 0), 2)


class TestSocialQuilt:
    def test_2r3(self):
        assert is_social_quilt(catalog("2R3").graph)

    def test_square_is_not(self):
        assert not is_social_quilt(SQUARE)

    def test_two_disjoint_triangles(self):
        assert is_social_quilt(TWO_TRIANGLES)

    def test_empty_vacuous(self):
        assert is_social_quilt(Graph(4, 0))


class TestClassify:
    def test_triangle_all_flags(self):
        c = classify(TRIANGLE, 2)
        assert (c.is_tc, c.cc, c.is_lcc, c.is_sq, c.is_simple_cycle) == (True, 1, True, True, True)

    def test_2r4_flags(self):
        c = classify(catalog("2R4").graph, 2)
        assert c.is_tc and c.cc == 2 and not c.is_lcc and not c.is_sq

    def test_pendant_triangle_not_rpe(self):
        c = classify(catalog("N1R3").graph, 2)
        assert not c.is_tc and c.cc is None and c.witnesses is None

    def test_witnesses_populated_for_tc(self):
        c = classify(TRIANGLE, 2)
        assert c.witnesses is not None
        for (node, edge), witness in c.witnesses.items():
            assert node in edge
            assert witness.edge_count == 0  # triangle justifications are the empty net

    def test_witness_is_the_surviving_triangle(self):
        c = classify(catalog("2R3").graph, 2)
        other_triangle = ((0, 3), (0, 4), (3, 4))
        assert c.witnesses[(0, (0, 1))].edges == other_triangle
        assert c.witnesses[(1, (0, 1))].edges == other_triangle

    def test_witness_drops_enough_degree(self):
        c = classify(catalog("3R3").graph, 2)
        g = c.graph
        for (node, edge), witness in c.witnesses.items():
            assert witness.degree(node) <= g.degree(node) - 2
            assert witness.edge_count <= g.edge_count - 2
            assert is_tc(witness, 2)

    def test_flag_consistency(self):
        for mask in range(2**6):
            c = classify(Graph(4, mask), 2)
            assert c.is_lcc == (c.is_tc and c.cc == 1)
            if c.cc == 0:
                assert c.graph.edge_count == 0

    def test_json_shape(self):
        doc = classify(TRIANGLE, 2).to_dict(network="1R3")
        assert doc == {
            "network": "1R3", "m": 2, "rpe": True, "cc": 1,
            "lcc": True, "sq": True, "simple_cycle": True,
        }

    def test_json_inline_graph(self):
        doc = classify(TRIANGLE, 2).to_dict()
        assert doc["network"] == {"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]}


class TestModelParams:
    def test_formula(self):
        params = ModelParams(p=0.1, v=20, c=10, delta=0.9, n=3)
        assert theoretical_b(params) == pytest.approx(10.0)

    def test_benefit_must_exceed_cost(self):
        with pytest.raises(ValueError):
            ModelParams(p=0.1, v=10, c=10, delta=0.9, n=3)

    def test_delta_bounds(self):
        with pytest.raises(ValueError):
            ModelParams(p=0.1, v=20, c=10, delta=1.0, n=3)

    def test_arrival_rate_cap(self):
        with pytest.raises(ValueError):
            ModelParams(p=0.2, v=20, c=10, delta=0.5, n=4)

    def test_experiment_calibration_in_range(self):
        assert in_range_m2(100, 110)
        assert not in_range_m2(100, 250)
        assert not in_range_m2(100, 90)


class TestEnumerateGraphs:
    def test_counts_up_to_two(self):
        assert sum(1 for _ in enumerate_graphs(2)) == 3

    def test_counts_up_to_three(self):
        assert sum(1 for _ in enumerate_graphs(3)) == 11

    def test_four_node_labeled_squares(self):
        squares = [
            g for g in enumerate_graphs(4)
            if g.n == 4 and g.edge_count == 4 and len(g.non_isolated()) == 4
            and classify(g, 2).is_simple_cycle
        ]
        assert len(squares) == 3

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            next(enumerate_graphs(8))
