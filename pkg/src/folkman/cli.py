"""Command-line front end over the staged pipeline.

Store arguments name graph6 files; relative names resolve inside the
--store directory.  Stage commands are idempotent: re-running a command
whose output manifest and digest already match is a no-op.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from .arrow import ArrowError, ArrowSpec, arrows_edge, arrows_vertex, encode_cnf_33
from .bh import BhError
from .extend import ExtendError
from .families import FamilyError, FamilyParams
from .graphs import GraphError, parse_graph6
from .pipeline import PipelineError, StagePlan, format_stats, run_stage, stats, verify_witness
from .sat import SatError, export_dimacs
from .store import GraphStore

FolkmanCliError = (
    ArrowError, BhError, ExtendError, FamilyError, GraphError,
    PipelineError, SatError, OSError,
)


def _resolve(store_dir: str, name: str) -> str:
    return name if os.path.isabs(name) or os.sep in name else os.path.join(store_dir, name)


def _engine(args) -> str:
    return "both" if args.cross_check else "sat"


def _common_plan_fields(args) -> dict:
    return {
        "workers": args.workers,
        "engine": _engine(args),
        "external_solver": args.external_solver,
    }


def _print_manifest(manifest: dict) -> None:
    json.dump(manifest, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _cmd_gen(args) -> int:
    plan = StagePlan(
        kind="generate",
        output=_resolve(args.store, args.output),
        n=args.n,
        max_clique=args.max_clique,
        max_alpha=args.max_alpha,
        **_common_plan_fields(args),
    )
    _print_manifest(run_stage(plan, force=args.force))
    return 0


def _cmd_filter(args) -> int:
    params = FamilyParams(
        args.n, args.p, args.s, s_exact=args.s_exact, variant=args.variant
    )
    plan = StagePlan(
        kind="filter",
        output=_resolve(args.store, args.output),
        inputs=[_resolve(args.store, i) for i in args.inputs],
        params=params,
        **_common_plan_fields(args),
    )
    _print_manifest(run_stage(plan, force=args.force))
    return 0


def _cmd_extend(args) -> int:
    plan = StagePlan(
        kind="extend",
        output=_resolve(args.store, args.output),
        inputs=[_resolve(args.store, i) for i in args.inputs],
        n=args.n,
        p=args.p,
        s=args.s,
        delta_mode=args.delta_mode,
        **_common_plan_fields(args),
    )
    _print_manifest(run_stage(plan, force=args.force))
    return 0


def _cmd_sperner(args) -> int:
    plan = StagePlan(
        kind="sperner",
        output=_resolve(args.store, args.output),
        inputs=[_resolve(args.store, i) for i in args.inputs],
        p=args.p,
        s=args.s,
        **_common_plan_fields(args),
    )
    _print_manifest(run_stage(plan, force=args.force))
    return 0


def _cmd_edges_down(args) -> int:
    plan = StagePlan(
        kind="edges-down",
        output=_resolve(args.store, args.output),
        inputs=[_resolve(args.store, i) for i in args.inputs],
        p=args.p,
        alpha_cap=args.alpha_cap,
        require_plus_k3=args.plus_k3,
        **_common_plan_fields(args),
    )
    _print_manifest(run_stage(plan, force=args.force))
    return 0


def _cmd_bh_check(args) -> int:
    from .bh import theorem1_check

    store = GraphStore.load(_resolve(args.store, args.input))
    result = theorem1_check(
        store.graphs(), engine=_engine(args), report_path=args.report
    )
    print(f"checked {result['checked']} base graphs")
    for key in result["positives"]:
        print(f"POSITIVE {key}")
    print("no B(H) arrows (3,3)" if not result["positives"] else
          f"{len(result['positives'])} positives found")
    return 0 if not result["positives"] else 1


def _read_graph_arg(args):
    text = args.graph
    if text == "-":
        text = sys.stdin.readline().strip()
    return parse_graph6(text)


def _cmd_arrow(args) -> int:
    g = _read_graph_arg(args)
    targets = tuple(int(t) for t in args.targets.split(","))
    spec = ArrowSpec(args.mode, targets)
    if args.dimacs:
        if spec.mode != "edge":
            print("DIMACS export applies to edge arrowing only", file=sys.stderr)
            return 2
        with open(args.dimacs, "w", encoding="ascii") as fh:
            fh.write(export_dimacs(encode_cnf_33(g)))
    if spec.mode == "edge":
        verdict = arrows_edge(
            g, spec, engine=_engine(args), external_solver=args.external_solver
        )
    else:
        verdict = arrows_vertex(g, spec)
    print(f"arrows: {verdict.arrows}")
    if verdict.witness is not None:
        print("witness: " + "".join(str(c) for c in verdict.witness))
    return 0


def _cmd_stats(args) -> int:
    store = GraphStore.load(_resolve(args.store, args.input))
    hists = stats(store)
    print(f"graphs: {len(store)}")
    print(format_stats(hists, tsv=args.tsv))
    return 0


def _cmd_verify_witness(args) -> int:
    ok = verify_witness(args.file)
    print("witness file OK" if ok else "witness file FAILED re-check")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="folkman",
        description="Staged computations over K4-free arrowing families.",
    )
    parser.add_argument("--workers", type=int, default=1, metavar="N",
                        help="worker processes for per-graph stages")
    parser.add_argument("--store", default=".", metavar="DIR",
                        help="directory where relative store names live")
    parser.add_argument("--external-solver", default=None, metavar="CMD",
                        help="external SAT solver command reading DIMACS on stdin")
    parser.add_argument("--cross-check", action="store_true",
                        help="decide every arrowing with both engines and compare")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_force(p):
        p.add_argument("--force", action="store_true",
                       help="recompute even when the output manifest matches")

    p = sub.add_parser("gen", help="generate all graphs of an order, optionally pruned")
    p.add_argument("n", type=int)
    p.add_argument("output")
    p.add_argument("--max-clique", type=int, default=None)
    p.add_argument("--max-alpha", type=int, default=None)
    add_force(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("filter", help="filter input stores down to a family")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    p.add_argument("s", type=int)
    p.add_argument("output")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--s-exact", action="store_true", help="require alpha = s exactly")
    p.add_argument("--variant", choices=("plain", "max", "plusK3"), default="plain")
    add_force(p)
    p.set_defaults(func=_cmd_filter)

    p = sub.add_parser("extend", help="non-Sperner maximal members by vertex attachment")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    p.add_argument("s", type=int)
    p.add_argument("output")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--delta-mode", action="store_true",
                   help="restrict to minimum degree >= 8 outputs")
    add_force(p)
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("sperner", help="Sperner maximal members by vertex duplication")
    p.add_argument("p", type=int)
    p.add_argument("s", type=int)
    p.add_argument("output")
    p.add_argument("inputs", nargs="+")
    add_force(p)
    p.set_defaults(func=_cmd_sperner)

    p = sub.add_parser("edges-down", help="downward closure by edge removal")
    p.add_argument("p", type=int)
    p.add_argument("output")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--alpha-cap", type=int, default=None)
    p.add_argument("--plus-k3", action="store_true",
                   help="keep only graphs of diameter at most 2")
    add_force(p)
    p.set_defaults(func=_cmd_edges_down)

    p = sub.add_parser("bh-check", help="check B(H) arrowing over a store")
    p.add_argument("input")
    p.add_argument("--report", default=None, help="per-graph report file")
    p.set_defaults(func=_cmd_bh_check)

    p = sub.add_parser("arrow", help="decide arrowing for one graph6 graph")
    p.add_argument("graph", help="graph6 string, or '-' for stdin")
    p.add_argument("--mode", choices=("edge", "vertex"), default="edge")
    p.add_argument("--targets", default="3,3", help="comma-separated clique targets")
    p.add_argument("--dimacs", default=None, help="also write the triangle CNF here")
    p.set_defaults(func=_cmd_arrow)

    p = sub.add_parser("stats", help="invariant histograms over a store")
    p.add_argument("input")
    p.add_argument("--tsv", action="store_true")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("verify-witness", help="re-check a witness file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify_witness)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FolkmanCliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
