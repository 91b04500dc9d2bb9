import pytest

from favornet.graph import Graph, is_simple_cycle
from favornet.verify import (
    check_cycle_law,
    check_cycles_are_tc,
    check_degree_laws,
    check_quilt_corner,
    complete_table,
    run_checks,
    seven_node_batch,
)


def test_complete_table_small():
    table = complete_table(3, 2)
    assert table.status(0b111)  # the triangle mask in K3
    assert not table.status(0b001)


def test_complete_table_cap():
    with pytest.raises(ValueError):
        complete_table(7, 2)


def test_cycle_law_small():
    report = check_cycle_law(max_nodes=5)
    assert report.ok
    assert report.graphs_checked == 1 + 2 + 8 + 64 + 1024


def test_degree_laws_small():
    assert check_degree_laws(max_nodes=5).ok


def test_cycles_are_tc_small():
    assert check_cycles_are_tc(max_nodes=5).ok


def test_quilt_corner_small():
    assert check_quilt_corner(max_nodes=5).ok


def test_seven_node_batch_is_seeded_and_capped():
    a = seven_node_batch(count=30, seed=9)
    b = seven_node_batch(count=30, seed=9)
    assert [g.mask for g in a] == [g.mask for g in b]
    assert all(g.n == 7 and g.edge_count <= 12 for g in a[:30])
    assert any(is_simple_cycle(g) for g in a)  # injected 7-rings


def test_run_checks_names():
    with pytest.raises(ValueError):
        run_checks(["nope"])


def test_batch_feeds_checks():
    batch = [Graph(7, 0b1010101)]
    report = check_degree_laws(max_nodes=2, batch=batch)
    assert report.ok
