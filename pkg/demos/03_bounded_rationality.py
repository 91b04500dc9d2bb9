"""Cooperation vs reasoning depth: sweep the cc budget of bounded agents.

Agents keep when they can "see" the equilibrium - when the network's
cognitive complexity number is within their budget L - and otherwise act
on a coin flip.  On a plain ring (cc 1) any budget suffices and nothing
gets deleted.  On 3R3 (cc 3) shallow agents flail, and once one link goes
the cascade is played out by everyone.  The printed delete ratios are a
property of this agent model, not a reproduction of human data.
"""

from favornet import BatchSpec, run_batch

NETWORKS = ("1R3", "1R4", "2R3", "2R4", "3R3")

print(f"{'budget':>6s} | " + " | ".join(f"{n:>6s}" for n in NETWORKS))
print("-" * (9 + 9 * len(NETWORKS)))
for budget in (0, 1, 2, 3):
    spec = BatchSpec(
        networks=NETWORKS,
        agents=f"cc:L={budget},fallback=rand:0.5",
        runs=400,
        seed=1234,
    )
    result = run_batch(spec)
    ratios = " | ".join(
        f"{result.per_network[n].delete_ratio:6.3f}" for n in NETWORKS
    )
    print(f"{budget:6d} | {ratios}")

print()
print("Reading: a column stays at zero once the budget reaches that")
print("network's cc number (1 for rings, 2 for 2R3/2R4, 3 for 3R3).")
