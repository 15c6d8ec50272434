"""Extension search for maximal members and the edge-removal closure.

Non-Sperner maximal members of L(n; p; s) arise by attaching s new
independent vertices to smaller (+K3) members, with the new neighborhoods
drawn from the maximal triangle-free subsets of the base; Sperner maximal
members arise by duplicating a vertex of a maximal member one order down;
the rest of the family is recovered by removing edges downward from the
maximal members.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .arrow import member_L
from .canon import canonical_form, _mask_has_edge, _mask_has_indep
from .graphs import Graph, bits, parse_graph6, popcount
from .invariants import (
    chromatic_number,
    independence_number,
    is_maximal_k4_free,
    is_plus_k3,
    is_sperner,
    maximal_triangle_free_subsets,
)
from .store import GraphStore


class ExtendError(ValueError):
    pass


@dataclass(frozen=True)
class ExtensionCandidate:
    base: Graph
    chosen: Tuple[int, ...]  # neighborhood masks, all from M(base)


def _alpha_within(nonadj, mask: int, cap: int) -> bool:
    """alpha of the induced subgraph on ``mask`` is <= cap."""
    return not _mask_has_indep(nonadj, mask, cap + 1)


def candidate_subsets(
    h: Graph, s: int, delta_mode: bool = False, min_degree_target: int = 8
) -> Iterator[ExtensionCandidate]:
    """s-element subsets N of M(h) passing the attachment conditions.

    (a) no chosen set equals a vertex neighborhood of h;
    (b) every pair of chosen sets shares an edge of h;
    (c) alpha(h - union of N') <= s - |N'| for every N' subset of N;
    and with ``delta_mode`` additionally
    (d) every chosen set has >= ``min_degree_target`` vertices;
    (e) every vertex outside union of N' keeps degree
        >= min_degree_target - s + |N'| for every N' subset of N.
    """
    n = h.n
    full = (1 << n) - 1
    adj = h.adj
    nonadj = [full & ~adj[v] & ~(1 << v) for v in range(n)]
    degs = h.degrees()

    if s == 0:
        if _alpha_within(nonadj, full, 0):
            yield ExtensionCandidate(h, ())
        return
    # (c) with the empty subcollection: alpha(h) <= s
    if not _alpha_within(nonadj, full, s):
        return
    if delta_mode and n and min(degs) < min_degree_target - s:
        return

    msets = maximal_triangle_free_subsets(h)
    nbhds = set(adj)

    def singleton_ok(m: int) -> bool:
        if m in nbhds:  # (a)
            return False
        if not _alpha_within(nonadj, full & ~m, s - 1):  # (c), |N'| = 1
            return False
        if delta_mode:
            if popcount(m) < min_degree_target:  # (d)
                return False
            need = min_degree_target - s + 1  # (e), |N'| = 1
            for v in bits(full & ~m):
                if degs[v] < need:
                    return False
        return True

    cands = [m for m in msets if singleton_ok(m)]
    k = len(cands)
    if k < s:
        return

    def pair_ok(a: int, b: int) -> bool:
        if not _mask_has_edge(adj, cands[a] & cands[b]):  # (b)
            return False
        union = cands[a] | cands[b]
        if not _alpha_within(nonadj, full & ~union, s - 2):  # (c), |N'| = 2
            return False
        if delta_mode:
            need = min_degree_target - s + 2
            for v in bits(full & ~union):
                if degs[v] < need:
                    return False
        return True

    compat = [[False] * k for _ in range(k)]
    for a, b in combinations(range(k), 2):
        compat[a][b] = compat[b][a] = pair_ok(a, b)

    def full_conditions(idxs: Tuple[int, ...]) -> bool:
        for r in range(3, s + 1):
            for sub in combinations(idxs, r):
                union = 0
                for i in sub:
                    union |= cands[i]
                if not _alpha_within(nonadj, full & ~union, s - r):
                    return False
                if delta_mode:
                    need = min_degree_target - s + r
                    for v in bits(full & ~union):
                        if degs[v] < need:
                            return False
        return True

    # enumerate s-cliques of the compatibility graph in index order
    def rec(start: int, chosen: List[int]) -> Iterator[Tuple[int, ...]]:
        if len(chosen) == s:
            yield tuple(chosen)
            return
        for i in range(start, k):
            if all(compat[j][i] for j in chosen):
                chosen.append(i)
                yield from rec(i + 1, chosen)
                chosen.pop()

    for idxs in rec(0, []):
        if full_conditions(idxs):
            yield ExtensionCandidate(h, tuple(cands[i] for i in idxs))


def build_extension(c: ExtensionCandidate) -> Graph:
    """Attach one new independent vertex per chosen set, in order."""
    g = c.base
    base_n = g.n
    for m in c.chosen:
        g = g.add_vertex(m)  # masks refer to base vertices only
    return g


def algorithm_extend(
    inputs: Iterable[Graph],
    n: int,
    p: int,
    s: int,
    delta_mode: bool = False,
    engine: str = "sat",
    validate_outputs: bool = True,
) -> Tuple[GraphStore, Dict[str, int]]:
    """All non-Sperner maximal-K4-free members of L(n; p; s), from the
    (+K3) members of L(n - s; p + 1; <= s).  Inputs that are not (+K3)
    graphs are skipped (they cannot yield maximal outputs) and tallied.

    Steps: build every conditioned extension, keep the non-Sperner maximal
    ones, deduplicate canonically, drop chromatic number below 6 - p, then
    drop arrowing failures.  With ``delta_mode`` only graphs with minimum
    degree >= 8 survive (the p = 0 optimization).
    """
    counts = {
        "inputs": 0,
        "inputs_not_plus_k3": 0,
        "inputs_dropped_degree": 0,
        "candidates": 0,
        "kept_step2": 0,
        "distinct": 0,
        "after_chi": 0,
        "after_arrowing": 0,
    }
    built: set = set()
    for h in inputs:
        counts["inputs"] += 1
        if h.n != n - s:
            raise ExtendError(f"input graph of order {h.n}; expected {n - s}")
        # removing the added independent set from any maximal output leaves
        # a (+K3) graph, so inputs of larger diameter cannot contribute
        if not is_plus_k3(h):
            counts["inputs_not_plus_k3"] += 1
            continue
        if delta_mode and h.n and min(h.degrees()) < 8 - s:
            counts["inputs_dropped_degree"] += 1
            continue
        for cand in candidate_subsets(h, s, delta_mode=delta_mode):
            counts["candidates"] += 1
            g = build_extension(cand)
            if is_sperner(g):
                continue
            if not is_maximal_k4_free(g):
                continue
            counts["kept_step2"] += 1
            built.add(canonical_form(g))
    counts["distinct"] = len(built)

    survivors = []
    for key in sorted(built):
        g = parse_graph6(key)
        if chromatic_number(g) >= 6 - p:
            survivors.append((key, g))
    counts["after_chi"] = len(survivors)

    store = GraphStore()
    for key, g in survivors:
        if member_L(g, p, engine=engine, use_chi_filter=False):
            store.insert_key(key)
    counts["after_arrowing"] = len(store)

    if validate_outputs:
        for g in store.graphs():
            _validate_extend_output(g, p, s, delta_mode)
    return store, counts


def _validate_extend_output(g: Graph, p: int, s: int, delta_mode: bool) -> None:
    if is_sperner(g):
        raise ExtendError("output is Sperner")
    if not is_maximal_k4_free(g):
        raise ExtendError("output is not maximal K4-free")
    if independence_number(g) != s:
        raise ExtendError("output independence number differs from s")
    if chromatic_number(g) < 6 - p:
        raise ExtendError("output chromatic number below 6 - p")
    if delta_mode and min(g.degrees()) < 8:
        raise ExtendError("output minimum degree below 8")


def sperner_extensions(
    prev: Iterable[Graph], p: int, s: int, engine: str = "sat"
) -> GraphStore:
    """All Sperner maximal members of L(n; p; s) by duplicating one vertex
    of each maximal member one order down (independence s - 1 or s)."""
    store = GraphStore()
    for h in prev:
        for v in range(h.n):
            g = h.duplicate_vertex(v)
            key = canonical_form(g)
            if key in store.keys:
                continue
            if not is_maximal_k4_free(g):
                continue
            if independence_number(g) != s:
                continue
            if not member_L(g, p, engine=engine):
                continue
            store.insert_key(key)
    return store


def edge_removal_closure(
    seeds: Iterable[Graph],
    p: int,
    alpha_cap: Optional[int] = None,
    require_plus_k3: bool = False,
    prune: bool = True,
    max_removals: Optional[int] = None,
    engine: str = "sat",
) -> Tuple[GraphStore, Dict[str, int]]:
    """Downward closure by single edge removals with canonical dedup.

    Emits every reachable graph satisfying all requested predicates:
    membership in L(.; p) always, plus the optional independence cap and
    (+K3) requirement.  Seeds must satisfy omega < 4; removal then keeps
    omega < 4 everywhere, and all three predicates are monotone under edge
    removal, so with ``prune`` a failing graph's subtree is cut; with
    ``prune=False`` the traversal continues past failures (bound it with
    ``max_removals``).
    """
    counts = {"visited": 0, "kept": 0, "pruned": 0}

    def passes(g: Graph) -> bool:
        if alpha_cap is not None and independence_number(g) > alpha_cap:
            return False
        if require_plus_k3 and not is_plus_k3(g):
            return False
        return member_L(g, p, engine=engine)

    from .invariants import has_clique

    visited: set = set()
    out = GraphStore()
    frontier: List[Tuple[str, Graph, bool]] = []
    for g in seeds:
        if has_clique(g, 4):
            # a K4 would make membership non-monotone along removals
            raise ExtendError("closure seeds must have clique number below 4")
        key = canonical_form(g)
        if key in visited:
            continue
        visited.add(key)
        counts["visited"] += 1
        ok = passes(g)
        if ok:
            out.insert_key(key)
            counts["kept"] += 1
        else:
            counts["pruned"] += 1
        if ok or not prune:
            frontier.append((key, g, ok))

    depth = 0
    while frontier:
        if max_removals is not None and depth >= max_removals:
            break
        depth += 1
        nxt: List[Tuple[str, Graph, bool]] = []
        for _key, g, _ok in frontier:
            for u, v in g.edge_list():
                child = g.remove_edge(u, v)
                ckey = canonical_form(child)
                if ckey in visited:
                    continue
                visited.add(ckey)
                counts["visited"] += 1
                ok = passes(child)
                if ok:
                    out.insert_key(ckey)
                    counts["kept"] += 1
                else:
                    counts["pruned"] += 1
                if ok or not prune:
                    nxt.append((ckey, child, ok))
        frontier = nxt
    return out, counts


def sample_members_by_edge_removal(
    seeds: List[Graph],
    p: int,
    count: int,
    alpha_cap: Optional[int] = None,
    require_plus_k3: bool = True,
    rng_seed: int = 0,
    engine: str = "sat",
) -> GraphStore:
    """Random bounded edge-removal walk collecting ``count`` distinct
    members; a cheap stand-in for the full closure at smoke-test scale."""
    rng = random.Random(rng_seed)
    out = GraphStore()
    for g in seeds:
        out.insert(g)
        if len(out) >= count:
            return out
    attempts = 0
    while len(out) < count and attempts < count * 200:
        attempts += 1
        g = seeds[rng.randrange(len(seeds))]
        while True:
            edges = g.edge_list()
            if not edges:
                break
            u, v = edges[rng.randrange(len(edges))]
            child = g.remove_edge(u, v)
            if alpha_cap is not None and independence_number(child) > alpha_cap:
                break
            if require_plus_k3 and not is_plus_k3(child):
                break
            if not member_L(child, p, engine=engine):
                break
            g = child
            if out.insert(g) and len(out) >= count:
                break
            if rng.random() < 0.3:
                break
    return out
