"""Classify the named experiment networks and print the equilibrium taxonomy.

Walks the catalog, runs the full classifier on each network, and shows the
report the service would return: equilibrium status (RPE), cognitive
complexity number, the low-cognitive-complexity flag, the social-quilt
flag, and whether the graph is a plain cycle.  Also peeks at a "witness":
the surviving subnetwork that justifies keeping a particular link.
"""

from favornet import catalog, catalog_names, classify

print(f"{'name':6s} {'nodes':>5s} {'edges':>5s} {'RPE':>5s} {'cc':>4s} "
      f"{'LCC':>5s} {'SQ':>5s} {'cycle':>5s}  provenance")
print("-" * 64)
for name in catalog_names():
    entry = catalog(name)
    c = classify(entry.graph, m=2)
    print(
        f"{name:6s} {entry.graph.n:5d} {entry.graph.edge_count:5d} "
        f"{str(c.is_rpe):>5s} {str(c.cc):>4s} {str(c.is_lcc):>5s} "
        f"{str(c.is_sq):>5s} {str(c.is_simple_cycle):>5s}  {entry.provenance}"
    )

print()
print("Why does the hub of 2R3 keep its links?  Deleting one would cost it")
print("the whole triangle around that link; what survives is the other")
print("triangle, in which the hub's degree dropped from 4 to 2:")
two_r3 = catalog("2R3").graph
report = classify(two_r3, m=2)
witness = report.witnesses[(0, (0, 1))]
print(f"  witness for (node 0, edge (0,1)): {witness.edges}")
