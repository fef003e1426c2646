"""Command-line entry point: ``rainbowpaths <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import harness
from .enumeration import all_cubic_graphs, all_trees, canonical_form, read_graph6_file
from .exceptions import RainbowError
from .formulas import PathQuery, construct_path_coloring, path_coloring_unique, path_value
from .graphcore import Graph, read_graph_file, serialize_graph, to_graph6
from .solver import solve
from .thwarting import theta_bruteforce, theta_tree_dp
from .zoo import FamilySpec, build

log = logging.getLogger("rainbowpaths")

CERTIFICATE_VERSION = 1


def _dump(obj, path: str | None):
    text = json.dumps(obj, indent=2, sort_keys=True)
    if path in (None, "-"):
        print(text)
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def cmd_paths(args) -> int:
    q = PathQuery(args.n, args.k, args.proper)
    out = {"n": q.n, "k": q.k, "proper": q.proper, "value": path_value(q)}
    out["unique"] = path_coloring_unique(q) if q.n >= q.k - 1 else None
    if args.emit_coloring:
        out["coloring"] = list(construct_path_coloring(q).colors)
    _dump(out, None)
    return 0


def cmd_theta(args) -> int:
    g = read_graph_file(args.graph)
    if args.oracle or not g.is_tree():
        if not g.is_tree():
            log.info("graph is not a tree; using the brute-force oracle")
        res = theta_bruteforce(g, args.k)
        method = "bruteforce"
    else:
        res = theta_tree_dp(g, args.k)
        method = "tree-dp"
    out = {"k": args.k, "theta": res.value, "method": method}
    if args.emit_witness:
        out["witness"] = res.witness.to_json_list()
    _dump(out, None)
    return 0


def certificate(g: Graph, k: int, proper: bool, count: bool = False, max_n: int | None = None) -> dict:
    res = solve(g, k, proper, max_n=max_n, count=count)
    cert = {
        "format-version": CERTIFICATE_VERSION,
        "graph": to_graph6(g),
        "k": k,
        "proper": proper,
        "value": res.value if res.defined else "undefined",
        "witness": list(res.witness.colors) if res.witness is not None else None,
    }
    if not proper and g.is_tree():
        th = theta_tree_dp(g, k)
        cert["upper-bound"] = {"type": "thwarting", "data": {"theta": th.value, "edges": th.witness.to_json_list()}}
    else:
        cert["upper-bound"] = {"type": "exhaustive", "data": {"search": "restricted-growth branch and bound", "nodes": res.nodes}}
    if count:
        cert["optimal-count"] = res.optimal_count
    return cert


def cmd_compute(args) -> int:
    g = read_graph_file(args.graph)
    cert = certificate(g, args.k, args.proper, args.count_optima, args.max_n)
    summary = {key: cert[key] for key in ("k", "proper", "value", "witness")}
    if args.count_optima:
        summary["optimal-count"] = cert["optimal-count"]
    _dump(summary, None)
    if args.certificate:
        _dump(cert, args.certificate)
    return 0


def cmd_make(args) -> int:
    core = read_graph_file(args.core) if args.core else None
    feet = tuple(int(x) for x in args.feet.split(",")) if args.feet else None
    g = build(FamilySpec(args.family, core=core, b=args.b, feet=feet))
    if args.family == "double-star" and args.b == 1:
        log.warning("D_1 is the path P_4")
    if args.family == "octopus" and args.b == 1:
        log.warning("O_1 is the path P_3")
    text = serialize_graph(g, args.format)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    return 0


def cmd_enumerate(args) -> int:
    if args.from_file:
        graphs = list(all_cubic_graphs(args.n, source=args.from_file)) if args.cubic else [g for g in read_graph6_file(args.from_file) if g.n == args.n]
    elif args.cubic:
        graphs = list(all_cubic_graphs(args.n))
    else:
        graphs = list(all_trees(args.n))
    for g in graphs:
        if args.format == "graph6":
            print(to_graph6(g))
        elif args.format == "canonical":
            print(canonical_form(g))
        else:
            print(serialize_graph(g, "edge-list"), end="")
            print()
    log.info("%d graphs", len(graphs))
    return 0


def cmd_verify(args) -> int:
    kw = {}
    if args.k:
        kw["k"] = tuple(args.k)
    if args.from_file:
        kw["source"] = args.from_file
    if args.campaign == "all":
        reports = harness.run_all(args.n_max, args.jobs)
    else:
        reports = [harness.run_campaign(args.campaign, args.n_max, args.jobs, **kw)]
    for r in reports:
        print(r.summary())
        for c in r.counterexamples[: args.show]:
            print(f"  counterexample {c.graph6}: {c.claim}; expected {c.expected}, observed {c.observed}")
    if args.report:
        payload = reports[0].to_dict() if len(reports) == 1 else {"schema_version": harness.SCHEMA_VERSION, "reports": [r.to_dict() for r in reports]}
        _dump(payload, args.report)
    return 2 if any(r.counterexamples for r in reports) else 0


def cmd_census(args) -> int:
    out = harness.cp4_census(args.n, args.jobs)
    if not args.full:
        out = {k: v for k, v in out.items() if k != "instances"} | {
            "coronas": sum(x["corona"] for x in out["instances"]),
            "other": sum(not (x["corona"] or x["path"] or x["double_star"]) for x in out["instances"]),
        }
    _dump(out, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rainbowpaths", description="Colorings without rainbow paths: exact values, families, verification.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("paths", help="closed-form values on paths")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--proper", action="store_true")
    s.add_argument("--emit-coloring", action="store_true")
    s.set_defaults(func=cmd_paths)

    s = sub.add_parser("theta", help="P_k-thwarting number")
    s.add_argument("--graph", required=True, help="edge list or graph6 file")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--oracle", action="store_true", help="use brute force instead of the tree DP")
    s.add_argument("--emit-witness", action="store_true")
    s.set_defaults(func=cmd_theta)

    s = sub.add_parser("compute", help="exact c_k or cp_k with a certificate")
    s.add_argument("--graph", required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--proper", action="store_true")
    s.add_argument("--count-optima", action="store_true")
    s.add_argument("--certificate")
    s.add_argument("--max-n", type=int, default=None, help="override the size guard")
    s.set_defaults(func=cmd_compute)

    s = sub.add_parser("make", help="build a named family member")
    s.add_argument("--family", required=True, choices=["corona", "multi-corona", "double-star", "octopus", "path", "star"])
    s.add_argument("--core")
    s.add_argument("--b", type=int)
    s.add_argument("--feet", help="comma-separated feet counts (multi-corona)")
    s.add_argument("--out", required=True)
    s.add_argument("--format", default="graph6", choices=["graph6", "edge-list"])
    s.set_defaults(func=cmd_make)

    s = sub.add_parser("enumerate", help="list non-isomorphic trees (or cubic graphs)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", default="graph6", choices=["graph6", "edge-list", "canonical"])
    s.add_argument("--cubic", action="store_true")
    s.add_argument("--from", dest="from_file", help="graph6 list from an external generator")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("verify", help="run a verification campaign")
    s.add_argument("campaign", choices=sorted(harness.CAMPAIGNS) + ["all"])
    s.add_argument("--n-max", type=int, default=None)
    s.add_argument("--k", type=int, action="append")
    s.add_argument("--jobs", type=int, default=None, help=f"worker processes (default ${harness.JOBS_ENV} or 1)")
    s.add_argument("--report")
    s.add_argument("--from", dest="from_file", help="graph6 source for the cubic campaign")
    s.add_argument("--show", type=int, default=5, help="counterexamples to print per campaign")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("census", help="trees attaining the minimum cp_4")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--full", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_census)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (RainbowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
