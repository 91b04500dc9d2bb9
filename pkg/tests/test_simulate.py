import pytest

from favornet.agents import build_roster
from favornet.catalog import catalog
from favornet.engine import GameConfig, run_game
from favornet.simulate import (
    BatchSpec,
    EmptyTraceError,
    Trace,
    delete_ratio,
    optimal_flags,
    optimality_ratio,
    run_batch,
)
from favornet.graph import make_graph

TRIANGLE = make_graph(3, [(0, 1), (1, 2), (0, 2)])


def play(graph, agents, seed):
    cfg = GameConfig(seed=seed)
    state = run_game(graph, cfg, build_roster(agents, graph.n, cfg.seed))
    return Trace.from_state(state)


class TestDeleteRatio:
    def test_all_keep_is_zero(self):
        trace = play(TRIANGLE, "eq", 3)
        assert len(trace.events) == 3
        assert delete_ratio([trace]) == 0.0

    def test_corner_case_trace(self):
        cfg = GameConfig(seed=13)
        roster = build_roster(
            ["script:[D(0-2),D(0-1)]", "script:[D(1-2)]", "script:[K]"], 3, cfg.seed
        )
        state = run_game(TRIANGLE, cfg, roster)
        assert delete_ratio([Trace.from_state(state)]) == 0.75

    def test_always_delete_on_triangle(self):
        trace = play(TRIANGLE, "rand:1.0", 5)
        deletes = sum(1 for ev in trace.events if ev.action == "delete")
        assert deletes == 3
        assert delete_ratio([trace]) == deletes / len(trace.events)

    def test_empty_input_rejected(self):
        with pytest.raises(EmptyTraceError):
            delete_ratio([])


class TestOptimalityRatio:
    def test_equilibrium_play_is_fully_optimal(self):
        traces = [play(catalog(n).graph, "eq", 7) for n in ("1R3", "2R4", "N1R3")]
        assert optimality_ratio(traces, 2) == 1.0

    def test_all_keep_on_pendant_triangle(self):
        # one pass of four keeps; the two pendant-edge owners should have deleted
        g = catalog("N1R3").graph
        trace = play(g, "script:[K]", 11)
        assert len(trace.events) == 4
        assert optimality_ratio([trace], 2) == 0.5

    def test_reproducible_for_fixed_seed(self):
        a = optimality_ratio([play(catalog("2R3").graph, "rand:0.6", 42)], 2)
        b = optimality_ratio([play(catalog("2R3").graph, "rand:0.6", 42)], 2)
        assert a == b

    def test_flags_align_with_events(self):
        trace = play(catalog("N1R3").graph, "rand:0.5", 9)
        flags = optimal_flags(trace, 2)
        assert len(flags) == len(trace.events)


class TestRunBatch:
    def test_equilibrium_fixed_point_batch(self):
        result = run_batch(BatchSpec(networks=("1R3",), agents="eq", runs=50, seed=42))
        stats = result.per_network["1R3"]
        assert stats.delete_ratio == 0.0
        assert stats.optimality_ratio == 1.0
        assert set(stats.final_census) == {'{"n":3,"edges":[[0,1],[0,2],[1,2]]}'}

    def test_pendant_triangle_always_settles(self):
        result = run_batch(BatchSpec(networks=("N1R3",), agents="eq", runs=40, seed=7))
        census = result.per_network["N1R3"].final_census
        assert census == {'{"n":4,"edges":[[0,1],[0,2],[1,2]]}': 40}

    def test_byte_identical_reruns(self):
        spec = BatchSpec(networks=("2R3", "1R4"), agents="rand:0.4", runs=25, seed=99)
        a, b = run_batch(spec), run_batch(spec)
        assert a.to_csv() == b.to_csv()
        assert a.to_json() == b.to_json()

    def test_pooled_is_decision_weighted(self):
        spec = BatchSpec(networks=("1R3", "N1R4"), agents="rand:0.3", runs=20, seed=5)
        result = run_batch(spec)
        total_dec = sum(s.decisions for s in result.per_network.values())
        total_del = sum(s.deletes for s in result.per_network.values())
        assert result.pooled.decisions == total_dec
        assert result.pooled.delete_ratio == total_del / total_dec

    def test_csv_columns(self):
        result = run_batch(BatchSpec(networks=("1R3",), agents="eq", runs=1, seed=1))
        lines = result.to_csv().splitlines()
        assert lines[0] == "network,run,turn,player,action,optimal,edges_remaining"
        assert len(lines) == 4  # header + one pass of keeps

    def test_bounded_agents_delete_more_on_deeper_networks(self):
        spec = BatchSpec(
            networks=("3R3", "1R3"),
            agents="cc:L=1,fallback=rand:0.5",
            runs=200,
            seed=2024,
        )
        result = run_batch(spec)
        assert (
            result.per_network["3R3"].delete_ratio
            > result.per_network["1R3"].delete_ratio
        )

    def test_unknown_network_rejected(self):
        with pytest.raises(KeyError):
            run_batch(BatchSpec(networks=("9R9",), agents="eq", runs=1, seed=0))

    def test_output_path_written(self, tmp_path):
        out = tmp_path / "r.json"
        run_batch(BatchSpec(networks=("1R3",), agents="eq", runs=2, seed=3,
                            output=str(out)))
        assert '"pooled"' in out.read_text()

    def test_runs_validated(self):
        with pytest.raises(ValueError):
            BatchSpec(networks=("1R3",), agents="eq", runs=0, seed=0)
