"""Decision policies for the link-deletion game.

The equilibrium player keeps everything on a TC network; off equilibrium
it steers toward one of the degree-maximal surviving TC subnetworks,
preferring the one that preserves most of its own links (ties broken by
smallest canonical bitmask), and deletes its lowest-indexed incident edge
that has no place in that target.

The cc-budget player models bounded iterative reasoning: it plays the
equilibrium move only when the network's cc number is within its budget,
and falls back to a configured policy when the required reasoning depth
exceeds it.  On non-TC networks it defers to the equilibrium policy (the
profitable deletion there is easy to see by construction).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .engine import Decision
from .equilibrium import cc_number, is_tc, maximal_tc_subnetworks
from .graph import Graph
from .rng import SplitMix64, derive_stream


def equilibrium_decision(g: Graph, me: int, m: int = 2) -> Decision:
    """Keep on TC networks; otherwise prune toward the chosen TC target."""
    if is_tc(g, m):
        return Decision.keep()
    target = _target_subnetwork(g, me, m)
    for edge in g.incident_edges(me):
        if not target.has_edge(*edge):
            return Decision.delete(*edge)
    return Decision.keep()


def _target_subnetwork(g: Graph, me: int, m: int) -> Graph:
    candidates = maximal_tc_subnetworks(g, m)
    return min(candidates, key=lambda h: (-h.degree(me), h.mask))


def cc_budget_decision(
    g: Graph, me: int, m: int, limit: int, fallback
) -> Decision:
    """Equilibrium play while cc(g) <= limit, else the fallback policy."""
    if limit < 0:
        raise ValueError(f"cc budget must be >= 0, got {limit}")
    if is_tc(g, m):
        if cc_number(g, m) <= limit:
            return Decision.keep()
        return fallback(g, me)
    return equilibrium_decision(g, me, m)


def random_decision(g: Graph, me: int, p_delete: float, rng: SplitMix64) -> Decision:
    """Delete a uniformly chosen incident edge with probability p_delete."""
    if not 0 <= p_delete <= 1:
        raise ValueError(f"p_delete must be in [0, 1], got {p_delete}")
    u = rng.random()
    incident = g.incident_edges(me)
    if u < p_delete and incident:
        return Decision.delete(*incident[rng.randbelow(len(incident))])
    return Decision.keep()


@dataclass(frozen=True)
class AgentSpec:
    """Declarative policy description, instantiated per game via make_policy.

    variant: "eq" | "cc" | "rand" | "script"
    """

    variant: str
    m: int = 2
    limit: int = 0
    fallback: "AgentSpec | None" = None
    p_delete: float = 0.0
    script: tuple[Decision, ...] = ()

    def make_policy(self, seed: int, node: int):
        """Bind this description to a game seed and node: (graph, node) -> Decision."""
        if self.variant == "eq":
            m = self.m
            return lambda g, me: equilibrium_decision(g, me, m)
        if self.variant == "rand":
            stream = derive_stream(seed, 0xA6E27, node)
            p = self.p_delete
            return lambda g, me: random_decision(g, me, p, stream)
        if self.variant == "cc":
            if self.fallback is None:
                raise ValueError("cc agent needs a fallback policy")
            fb = self.fallback.make_policy(seed, node)
            m, limit = self.m, self.limit
            return lambda g, me: cc_budget_decision(g, me, m, limit, fb)
        if self.variant == "script":
            it = iter(self.script)

            def scripted(g: Graph, me: int) -> Decision:
                try:
                    return next(it)
                except StopIteration:
                    raise RuntimeError(f"scripted agent for node {node} ran out of decisions")

            return scripted
        raise ValueError(f"unknown agent variant {self.variant!r}")


def equilibrium_agent(m: int = 2) -> AgentSpec:
    return AgentSpec("eq", m=m)


def random_agent(p_delete: float) -> AgentSpec:
    return AgentSpec("rand", p_delete=p_delete)


def cc_budget_agent(limit: int, fallback: AgentSpec, m: int = 2) -> AgentSpec:
    return AgentSpec("cc", m=m, limit=limit, fallback=fallback)


def scripted_agent(decisions: list[Decision]) -> AgentSpec:
    return AgentSpec("script", script=tuple(decisions))


_SCRIPT_STEP = re.compile(r"^(K|D\((\d+)-(\d+)\))$")


def parse_agent_spec(text: str) -> AgentSpec:
    """Parse the CLI syntax: "eq", "rand:0.3", "cc:L=1,fallback=rand:0.5",
    "script:[K,D(0-1),K]"."""
    text = text.strip()
    if text == "eq":
        return equilibrium_agent()
    if text.startswith("rand:"):
        return random_agent(float(text[len("rand:"):]))
    if text.startswith("cc:"):
        body = text[len("cc:"):]
        limit = None
        fallback = None
        # fallback value may itself contain ':'; split only on the L= part
        for part in body.split(",", 1):
            if part.startswith("L="):
                limit = int(part[2:])
            elif part.startswith("fallback="):
                fallback = parse_agent_spec(part[len("fallback="):])
            else:
                raise ValueError(f"unrecognized cc agent field {part!r}")
        if limit is None or fallback is None:
            raise ValueError("cc agent syntax is cc:L=<int>,fallback=<spec>")
        return cc_budget_agent(limit, fallback)
    if text.startswith("script:[") and text.endswith("]"):
        steps = []
        body = text[len("script:["):-1]
        for step in filter(None, (s.strip() for s in body.split(","))):
            match = _SCRIPT_STEP.match(step)
            if not match:
                raise ValueError(f"bad script step {step!r}; use K or D(i-j)")
            if step == "K":
                steps.append(Decision.keep())
            else:
                steps.append(Decision.delete(int(match.group(2)), int(match.group(3))))
        return scripted_agent(steps)
    raise ValueError(
        f"cannot parse agent spec {text!r}; expected eq, rand:<p>, "
        "cc:L=<int>,fallback=<spec>, or script:[...]"
    )


def build_roster(spec, n: int, seed: int) -> list:
    """One policy per node from a single spec or a per-node list of specs."""
    if isinstance(spec, (str, AgentSpec)):
        specs = [spec] * n
    else:
        specs = list(spec)
        if len(specs) != n:
            raise ValueError(f"roster has {len(specs)} entries for {n} nodes")
    out = []
    for node, s in enumerate(specs):
        if isinstance(s, str):
            s = parse_agent_spec(s)
        out.append(s.make_policy(seed, node))
    return out
