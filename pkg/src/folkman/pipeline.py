"""Staged, resumable orchestration with manifests and worker pools.

Every stage is a per-graph map plus a set merge, so output stores are
independent of worker count and shard interleaving; manifests carry the
counts, parameters, digests, and rejection tallies that the acceptance
suite audits.  Re-running a completed stage is a digest-verified no-op.
"""
from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .arrow import check_edge_witness
from .canon import clique_alpha_extension_enum, generate_all_keys
from .extend import algorithm_extend, edge_removal_closure, sperner_extensions
from .families import FamilyParams, filter_family
from .graphs import Graph, parse_graph6
from .invariants import independence_number
from .store import GraphStore, load_manifest, manifest_path, store_matches_manifest


class PipelineError(RuntimeError):
    pass


SHARD_SIZE = 2000


@dataclass
class StagePlan:
    kind: str  # generate | filter | extend | sperner | edges-down | bh-check | stats
    output: str
    inputs: List[str] = field(default_factory=list)
    params: Optional[FamilyParams] = None
    n: int = 0
    p: int = 0
    s: int = 0
    delta_mode: bool = False
    max_clique: Optional[int] = None
    max_alpha: Optional[int] = None
    alpha_cap: Optional[int] = None
    require_plus_k3: bool = False
    workers: int = 1
    engine: str = "sat"
    external_solver: Optional[str] = None

    def signature(self) -> Dict:
        return {
            "kind": self.kind,
            "inputs": list(self.inputs),
            "params": self.params.to_dict() if self.params else None,
            "n": self.n,
            "p": self.p,
            "s": self.s,
            "delta_mode": self.delta_mode,
            "max_clique": self.max_clique,
            "max_alpha": self.max_alpha,
            "alpha_cap": self.alpha_cap,
            "require_plus_k3": self.require_plus_k3,
        }


def _load_input_keys(paths: Sequence[str]) -> List[str]:
    keys: set = set()
    for path in paths:
        keys |= GraphStore.load(path).keys
    return sorted(keys)


def _check_input_manifest(plan: StagePlan, path: str, expect: Dict) -> None:
    manifest = load_manifest(path)
    if manifest is None:
        return  # bare graph6 files (external ingests) carry no manifest
    have = manifest.get("params", {}).get("family")
    if have is None:
        return
    for k, v in expect.items():
        if k == "variant":
            # the plain family is a superset of its +K3 members, and the
            # extension skips the non-(+K3) inputs itself
            if have.get(k) in (v, "plain"):
                continue
        if have.get(k) != v:
            raise PipelineError(
                f"input manifest mismatch for {path}: expected {expect}, found {have}"
            )


# -- worker tasks (top level for pickling) -----------------------------------

def _filter_shard(args) -> Tuple[List[str], Dict[str, int]]:
    keys, params_d, engine, external = args
    params = FamilyParams.from_dict(params_d)
    store, tallies = filter_family(
        (parse_graph6(k) for k in keys), params, engine=engine, external_solver=external
    )
    return sorted(store.keys), tallies


def _extend_shard(args) -> Tuple[List[str], Dict[str, int]]:
    keys, n, p, s, delta_mode, engine = args
    store, counts = algorithm_extend(
        (parse_graph6(k) for k in keys), n, p, s, delta_mode=delta_mode, engine=engine
    )
    return sorted(store.keys), counts


def _sperner_shard(args) -> List[str]:
    keys, p, s, engine = args
    store = sperner_extensions((parse_graph6(k) for k in keys), p, s, engine=engine)
    return sorted(store.keys)


def _map_shards(worker, tasks: List, workers: int) -> List:
    if workers <= 1 or len(tasks) <= 1:
        return [worker(t) for t in tasks]
    with multiprocessing.Pool(workers) as pool:
        return pool.map(worker, tasks)


def _shards(keys: List[str]) -> List[List[str]]:
    return [keys[i : i + SHARD_SIZE] for i in range(0, len(keys), SHARD_SIZE)]


def _merge_tallies(parts: Iterable[Dict[str, int]]) -> Dict[str, int]:
    out: Dict[str, int] = {}
    for part in parts:
        for k, v in part.items():
            out[k] = out.get(k, 0) + v
    return out


# -- stages -------------------------------------------------------------------

def run_stage(plan: StagePlan, force: bool = False) -> Dict:
    """Execute one stage; a completed stage with a matching manifest and
    digest is skipped."""
    existing = load_manifest(plan.output)
    if (
        not force
        and existing is not None
        and existing.get("params", {}).get("stage") == plan.signature()
        and store_matches_manifest(plan.output)
    ):
        return existing

    t0 = time.time()
    if plan.kind == "generate":
        result = _stage_generate(plan)
    elif plan.kind == "filter":
        result = _stage_filter(plan)
    elif plan.kind == "extend":
        result = _stage_extend(plan)
    elif plan.kind == "sperner":
        result = _stage_sperner(plan)
    elif plan.kind == "edges-down":
        result = _stage_edges_down(plan)
    else:
        raise PipelineError(f"unknown stage kind {plan.kind!r}")
    store, tallies = result

    params: Dict = {"stage": plan.signature()}
    if plan.params is not None:
        params["family"] = plan.params.to_dict()
    manifest = store.save(plan.output, params=params)
    manifest["tallies"] = tallies
    manifest["input_digests"] = {
        path: GraphStore.load(path).digest() for path in plan.inputs
    }
    manifest["wall_time_s"] = round(time.time() - t0, 3)
    with open(manifest_path(plan.output), "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return manifest


def _stage_generate(plan: StagePlan) -> Tuple[GraphStore, Dict]:
    enum = None
    prune = None
    if plan.max_clique is not None or plan.max_alpha is not None:
        if plan.max_clique is None or plan.max_alpha is None:
            raise PipelineError("generation prune needs both clique and alpha caps")
        enum = clique_alpha_extension_enum(plan.max_clique, plan.max_alpha)
    keys = generate_all_keys(plan.n, prune=prune, extension_enum=enum)
    return GraphStore(set(keys)), {"generated": len(keys)}


def _stage_filter(plan: StagePlan) -> Tuple[GraphStore, Dict]:
    if plan.params is None:
        raise PipelineError("filter stage needs family parameters")
    keys = _load_input_keys(plan.inputs)
    tasks = [
        (shard, plan.params.to_dict(), plan.engine, plan.external_solver)
        for shard in _shards(keys)
    ]
    parts = _map_shards(_filter_shard, tasks, plan.workers)
    store = GraphStore()
    for part_keys, _t in parts:
        store.keys |= set(part_keys)
    tallies = _merge_tallies(t for _k, t in parts)
    return store, tallies


def _stage_extend(plan: StagePlan) -> Tuple[GraphStore, Dict]:
    expect = {
        "n": plan.n - plan.s,
        "p": plan.p + 1,
        "s": plan.s,
        "s_exact": False,
        "variant": "plusK3",
    }
    for path in plan.inputs:
        _check_input_manifest(plan, path, expect)
    keys = _load_input_keys(plan.inputs)
    tasks = [
        (shard, plan.n, plan.p, plan.s, plan.delta_mode, plan.engine)
        for shard in _shards(keys)
    ]
    parts = _map_shards(_extend_shard, tasks, plan.workers)
    store = GraphStore()
    for part_keys, _c in parts:
        store.keys |= set(part_keys)
    tallies = _merge_tallies(c for _k, c in parts)
    # cross-shard duplicates collapse in the merge; recount the survivors
    tallies["after_arrowing"] = len(store)
    return store, tallies


def _stage_sperner(plan: StagePlan) -> Tuple[GraphStore, Dict]:
    keys = _load_input_keys(plan.inputs)
    tasks = [(shard, plan.p, plan.s, plan.engine) for shard in _shards(keys)]
    parts = _map_shards(_sperner_shard, tasks, plan.workers)
    store = GraphStore()
    for part_keys in parts:
        store.keys |= set(part_keys)
    return store, {"inputs": len(keys), "kept": len(store)}


def _stage_edges_down(plan: StagePlan) -> Tuple[GraphStore, Dict]:
    keys = _load_input_keys(plan.inputs)
    store, counts = edge_removal_closure(
        (parse_graph6(k) for k in keys),
        plan.p,
        alpha_cap=plan.alpha_cap,
        require_plus_k3=plan.require_plus_k3,
        engine=plan.engine,
    )
    return store, counts


# -- reporting ----------------------------------------------------------------

def stats(store: GraphStore) -> Dict[str, Dict[int, int]]:
    """Histograms of edge count, min degree, max degree, and independence
    number over a store."""
    hists: Dict[str, Dict[int, int]] = {
        "edges": {},
        "delta": {},
        "Delta": {},
        "alpha": {},
    }
    for g in store.graphs():
        degs = g.degrees()
        vals = {
            "edges": g.edge_count,
            "delta": min(degs) if degs else 0,
            "Delta": max(degs) if degs else 0,
            "alpha": independence_number(g),
        }
        for name, v in vals.items():
            hists[name][v] = hists[name].get(v, 0) + 1
    return hists


def format_stats(hists: Dict[str, Dict[int, int]], tsv: bool = False) -> str:
    lines = []
    for name in ("edges", "delta", "Delta", "alpha"):
        hist = hists[name]
        if tsv:
            for k in sorted(hist):
                lines.append(f"{name}\t{k}\t{hist[k]}")
        else:
            lines.append(f"{name}:")
            for k in sorted(hist):
                lines.append(f"  {k:>4} {hist[k]:>10}")
    return "\n".join(lines)


# -- witness files ------------------------------------------------------------

def write_witness(path: str, g: Graph, colors: Sequence[int]) -> None:
    from .graphs import to_graph6

    with open(path, "w", encoding="ascii") as fh:
        fh.write(to_graph6(g) + " " + "".join(str(c) for c in colors) + "\n")


def verify_witness(path: str) -> bool:
    """Re-check stored good colorings: one '<graph6> <bitstring>' per line."""
    ok = True
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise PipelineError(f"malformed witness line: {line!r}")
            g = parse_graph6(parts[0])
            if any(c not in "01" for c in parts[1]):
                raise PipelineError(f"malformed color bitstring: {parts[1]!r}")
            colors = [int(c) for c in parts[1]]
            if len(colors) != len(g.edge_list()):
                raise PipelineError("witness colors do not match the graph's edges")
            if not check_edge_witness(g, colors):
                ok = False
    return ok
