"""Exact structural invariants used as pipeline filters.

Everything here is exact; the pipeline's results are counting claims, so
no heuristic shortcuts are taken anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .graphs import Graph, bits, popcount


@dataclass(frozen=True)
class InvariantRecord:
    omega: int
    alpha: int
    chi: int
    delta: int
    Delta: int
    edge_count: int


def invariant_record(g: Graph) -> InvariantRecord:
    degs = g.degrees()
    return InvariantRecord(
        omega=clique_number(g),
        alpha=independence_number(g),
        chi=chromatic_number(g),
        delta=min(degs) if degs else 0,
        Delta=max(degs) if degs else 0,
        edge_count=g.edge_count,
    )


# -- clique / independence ----------------------------------------------------

def clique_number(g: Graph, cap: Optional[int] = None) -> int:
    """Exact maximum clique size by branch and bound on bitmasks.

    With ``cap`` set, returns early with ``cap`` as soon as a clique of
    that size is found (the exact value is then >= cap).
    """
    n = g.n
    if n == 0:
        return 0
    adj = g.adj
    # order vertices by descending degree for better early bounds
    order = sorted(range(n), key=lambda v: -popcount(adj[v]))
    best = 1

    def expand(cand: int, size: int) -> None:
        nonlocal best
        while cand:
            if cap is not None and best >= cap:
                return
            if size + popcount(cand) <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            if size + 1 > best:
                best = size + 1
            nxt = cand & adj[v]
            if nxt:
                expand(nxt, size + 1)

    full = (1 << n) - 1
    expand(full, 0)
    return best


def has_clique(g: Graph, k: int) -> bool:
    if k <= 0:
        return True
    if k == 1:
        return g.n >= 1
    return clique_number(g, cap=k) >= k


def independence_number(g: Graph, cap: Optional[int] = None) -> int:
    return clique_number(g.complement(), cap=cap)


def alpha_at_most(g: Graph, s: int) -> bool:
    """True iff the independence number is <= s."""
    return not has_clique(g.complement(), s + 1)


def alpha_of_mask(g: Graph, mask: int, cap: Optional[int] = None) -> int:
    """Independence number of the subgraph induced by ``mask``."""
    return independence_number(g.subgraph(mask), cap=cap)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("degree extremes undefined on the empty graph")
    return min(g.degrees())


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("degree extremes undefined on the empty graph")
    return max(g.degrees())


# -- chromatic number ---------------------------------------------------------

def is_k_colorable(g: Graph, k: int) -> bool:
    """Decision procedure: proper vertex coloring with at most k colors.

    Backtracking with most-constrained-vertex selection; exact.
    """
    n = g.n
    if k >= n:
        return True
    if k <= 0:
        return n == 0
    adj = g.adj
    colors = [-1] * n
    # forbid[v] = bitmask of colors unusable at v
    forbid = [0] * n
    kfull = (1 << k) - 1

    def pick() -> int:
        best, bestkey = -1, (-1, -1)
        for v in range(n):
            if colors[v] < 0:
                key = (popcount(forbid[v]), popcount(adj[v]))
                if key > bestkey:
                    best, bestkey = v, key
        return best

    def rec(assigned: int, maxused: int) -> bool:
        if assigned == n:
            return True
        v = pick()
        avail = kfull & ~forbid[v]
        # symmetry break: allow at most one brand-new color
        avail &= (1 << min(maxused + 1, k)) - 1
        if not avail:
            return False
        for c in bits(avail):
            colors[v] = c
            touched = []
            ok = True
            for u in bits(adj[v]):
                if colors[u] < 0 and not forbid[u] >> c & 1:
                    forbid[u] |= 1 << c
                    touched.append(u)
                    if forbid[u] == kfull:
                        ok = False
            if ok and rec(assigned + 1, max(maxused, c + 1)):
                return True
            colors[v] = -1
            for u in touched:
                forbid[u] &= ~(1 << c)
        return False

    return rec(0, 0)


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    lo = clique_number(g)
    k = lo
    while not is_k_colorable(g, k):
        k += 1
    return k


# -- predicates used by the family definitions -------------------------------

def is_plus_k3(g: Graph) -> bool:
    """Every pair of non-adjacent vertices has a common neighbor.

    Equivalently: complete, or of diameter 2; adding any edge then closes
    a new triangle.
    """
    adj = g.adj
    for u in range(g.n):
        non = ~adj[u] & ((1 << g.n) - 1) & ~(1 << u)
        non >>= u + 1
        for off in bits(non):
            v = u + 1 + off
            if not adj[u] & adj[v]:
                return False
    return True


def sperner_witness(g: Graph) -> Optional[Tuple[int, int]]:
    """Smallest (u, v), u != v, with N(u) a subset of N(v), if any.

    Adjacent pairs never qualify (v is in N(u) but not in N(v)).
    """
    adj = g.adj
    for u in range(g.n):
        row = adj[u]
        for v in range(g.n):
            if v != u and not row & ~adj[v]:
                return (u, v)
    return None


def is_sperner(g: Graph) -> bool:
    return sperner_witness(g) is not None


def is_maximal_k4_free(g: Graph) -> bool:
    """omega(g) < 4 and every added edge completes a K4.

    A non-edge (u, v) completes a K4 iff the common neighborhood of u and
    v contains an edge.
    """
    adj = g.adj
    n = g.n
    for u in range(n):
        non = (~adj[u] & ((1 << n) - 1) & ~(1 << u)) >> (u + 1)
        for off in bits(non):
            v = u + 1 + off
            common = adj[u] & adj[v]
            if not _mask_has_edge(adj, common):
                return False
    return not has_clique(g, 4)


def _mask_has_edge(adj, mask: int) -> bool:
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        if adj[v] & m:
            return True
    return False


# -- maximal triangle-free subsets -------------------------------------------

def triangle_in_mask(g: Graph, mask: int) -> bool:
    """True iff the subgraph induced by ``mask`` contains a triangle."""
    adj = g.adj
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        if _mask_has_edge(adj, adj[v] & m):
            return True
    return False


def maximal_triangle_free_subsets(g: Graph) -> list:
    """All inclusion-maximal S with g[S] triangle-free, sorted by bitmask.

    Recursion over vertices with an incremental triangle check; a leaf is
    kept only if no outside vertex can be added without closing a triangle.
    """
    n = g.n
    adj = g.adj
    out = []

    def extendable(cur: int, v: int) -> bool:
        # would adding v to cur close a triangle?
        common = adj[v] & cur
        return not _mask_has_edge(adj, common)

    def rec(v: int, cur: int, excluded: int) -> None:
        if v == n:
            # maximal iff every excluded vertex would close a triangle
            for u in bits(excluded):
                if extendable(cur, u):
                    return
            out.append(cur)
            return
        if extendable(cur, v):
            rec(v + 1, cur | 1 << v, excluded)
            rec(v + 1, cur, excluded | 1 << v)
        else:
            rec(v + 1, cur, excluded)

    rec(0, 0, 0)
    out.sort()
    return out
