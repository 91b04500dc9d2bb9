"""Watch equilibrium agents repair a broken network, turn by turn.

N1R4 is a 4-ring with a pendant node hanging off node 1.  The pendant
relationship cannot be sustained (its owner would never lose enough by
dropping it), so equilibrium play deletes exactly that link and then
settles: the surviving 4-ring is self-sustaining and everyone keeps.
"""

from favornet import GameConfig, build_roster, catalog, payoffs, run_game

graph = catalog("N1R4").graph
print(f"start: {graph.edges}")

cfg = GameConfig(seed=7)
state = run_game(graph, cfg, build_roster("eq", graph.n, cfg.seed))

for ev in state.trace:
    what = f"deletes {ev.edge}" if ev.action == "delete" else "keeps"
    print(f"  turn {ev.turn}: node {ev.player} {what} "
          f"({ev.edges_remaining} edges left, {ev.consecutive_keeps} keeps in a row)")

print(f"final: {state.graph.edges}")
print(f"payoffs at b=100/c=110: {payoffs(state)}")
print(f"trace hash (replayable bit for bit): {state.trace_hash()}")
