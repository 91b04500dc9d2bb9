"""Command-line front end: classify, cc, quilt, catalog, simulate, enumerate, serve."""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import catalog_names, graph_to_dict, resolve_network
from .equilibrium import CcUndefinedError, classify, cc_number, is_social_quilt
from .simulate import BatchSpec, run_batch
from .verify import CHECKS, run_checks


def _network_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("network", help=f"catalog name ({', '.join(catalog_names())}) or graph JSON file")


def cmd_classify(args: argparse.Namespace) -> int:
    label, g = resolve_network(args.network)
    print(json.dumps(classify(g, args.m).to_dict(network=label)))
    return 0


def cmd_cc(args: argparse.Namespace) -> int:
    label, g = resolve_network(args.network)
    try:
        value = cc_number(g, args.m)
    except CcUndefinedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps({"network": label, "m": args.m, "cc": value}))
    return 0


def cmd_quilt(args: argparse.Namespace) -> int:
    label, g = resolve_network(args.network)
    print(json.dumps({"network": label, "sq": is_social_quilt(g)}))
    return 0


def cmd_catalog(_args: argparse.Namespace) -> int:
    from .catalog import catalog

    for name in catalog_names():
        entry = catalog(name)
        doc = {"name": name, "provenance": entry.provenance}
        doc.update(graph_to_dict(entry.graph))
        print(json.dumps(doc))
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    networks = []
    for item in args.network:
        networks.extend(s for s in item.split(",") if s)
    spec = BatchSpec(
        networks=tuple(networks),
        agents=args.agents if len(args.agents) > 1 else args.agents[0],
        runs=args.runs,
        seed=args.seed,
        m=args.m,
        output=args.out,
    )
    result = run_batch(spec)
    for name, stats in result.per_network.items():
        print(
            f"{name}: runs={stats.runs} decisions={stats.decisions} "
            f"delete_ratio={stats.delete_ratio:.4f} optimality_ratio={stats.optimality_ratio:.4f}"
        )
    pooled = result.pooled
    print(
        f"pooled: decisions={pooled.decisions} delete_ratio={pooled.delete_ratio:.4f} "
        f"optimality_ratio={pooled.optimality_ratio:.4f}"
    )
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    names = list(CHECKS) if args.check == "all" else [args.check]
    reports = run_checks(names, max_nodes=min(args.max_nodes, 6), with_batch=args.max_nodes >= 7)
    for report in reports:
        status = "ok" if report.ok else "VIOLATIONS"
        print(f"{report.name}: {report.graphs_checked} graphs checked, {status}")
        for v in report.violations[:20]:
            print(f"  {v}")
    return 0 if all(r.ok for r in reports) else 1


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(persist=args.persist, static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="favornet")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="equilibrium report for one network")
    _network_arg(p)
    p.add_argument("--m", type=int, default=2)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("cc", help="cognitive complexity number")
    _network_arg(p)
    p.add_argument("--m", type=int, default=2)
    p.set_defaults(fn=cmd_cc)

    p = sub.add_parser("quilt", help="social quilt test (m=2)")
    _network_arg(p)
    p.set_defaults(fn=cmd_quilt)

    p = sub.add_parser("catalog", help="list the named networks")
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("simulate", help="run seeded batches and report ratios")
    p.add_argument("--network", action="append", required=True, help="repeatable; commas allowed")
    p.add_argument("--agents", action="append", default=None,
                   help="agent spec for all nodes, or repeat per node (eq, rand:0.3, ...)")
    p.add_argument("--runs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--out", help="write .csv or .json results here")
    p.set_defaults(fn=cmd_simulate)

    p = sub.add_parser("enumerate", help="run the exhaustive property suites")
    p.add_argument("--max-nodes", type=int, default=6)
    p.add_argument("--check", choices=sorted(CHECKS) + ["all"], default="all")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("serve", help="host interactive sessions over HTTP")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--persist", help="append finished session traces to this JSONL file")
    p.add_argument("--static", help="serve a built UI from this directory at /ui")
    p.set_defaults(fn=cmd_serve)

    args = parser.parse_args(argv)
    if getattr(args, "agents", None) is None and args.command == "simulate":
        args.agents = ["eq"]
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
