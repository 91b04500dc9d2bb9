"""Cooperation on networks: exact equilibrium taxonomy of favor-exchange
networks plus a faithful simulator of the sequential link-deletion game.

The library half classifies small graphs (transitively critical status,
cognitive complexity number, social quilts, simple-cycle law) with exact
bitmask dynamic programming.  The game half provides a deterministic
turn-based engine, equilibrium and bounded-rationality agents, a batch
harness with decision-level metrics, and an HTTP service for live play.
"""

from .agents import (
    AgentSpec,
    build_roster,
    cc_budget_agent,
    cc_budget_decision,
    equilibrium_agent,
    equilibrium_decision,
    parse_agent_spec,
    random_agent,
    random_decision,
    scripted_agent,
)
from .catalog import (
    CatalogEntry,
    catalog,
    catalog_names,
    graph_from_dict,
    graph_to_dict,
    read_graph,
    resolve_network,
    ring_star,
    write_graph,
)
from .engine import (
    Decision,
    GameConfig,
    GameState,
    TraceEvent,
    apply_decision,
    new_game,
    next_player,
    payoffs,
    run_game,
)
from .equilibrium import (
    CC_TIE_RULE,
    Classification,
    ModelParams,
    TcTable,
    build_tc_table,
    cc_number,
    classify,
    corner_case_bound,
    enumerate_graphs,
    in_corner_range,
    in_range_m2,
    is_lcc,
    is_rpe,
    is_social_quilt,
    is_tc,
    maximal_tc_subnetworks,
    tc_table_for,
    theoretical_b,
)
from .graph import (
    DegreeProfile,
    EdgeAbsentError,
    Graph,
    GraphError,
    ResourceLimitError,
    StructuralFacts,
    degree_profile,
    delete_link,
    dominates,
    enumerate_subnetworks,
    is_simple_cycle,
    make_graph,
    structural_facts,
)
from .simulate import (
    BatchSpec,
    SimResult,
    Trace,
    delete_ratio,
    optimality_ratio,
    run_batch,
)

__version__ = "0.1.0"

__all__ = [
    "AgentSpec", "BatchSpec", "CC_TIE_RULE", "CatalogEntry", "Classification",
    "Decision", "DegreeProfile", "EdgeAbsentError", "GameConfig", "GameState",
    "Graph", "GraphError", "ModelParams", "ResourceLimitError", "SimResult",
    "StructuralFacts", "TcTable", "Trace", "TraceEvent", "apply_decision",
    "build_roster", "build_tc_table", "catalog", "catalog_names",
    "cc_budget_agent", "cc_budget_decision", "cc_number", "classify",
    "corner_case_bound", "degree_profile", "delete_link", "delete_ratio",
    "dominates", "enumerate_graphs", "enumerate_subnetworks",
    "equilibrium_agent", "equilibrium_decision", "graph_from_dict",
    "graph_to_dict", "in_corner_range", "in_range_m2",
    "is_lcc", "is_rpe", "is_simple_cycle", "is_social_quilt", "is_tc",
    "make_graph", "maximal_tc_subnetworks", "new_game", "next_player",
    "optimality_ratio", "parse_agent_spec", "payoffs", "random_agent",
    "random_decision", "read_graph", "resolve_network", "ring_star",
    "run_batch", "run_game", "scripted_agent", "structural_facts",
    "tc_table_for", "theoretical_b", "write_graph",
]
