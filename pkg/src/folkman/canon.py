"""Canonical labeling, isomorphism testing, and isomorph-free generation.

The canonical form is the lexicographically least adjacency bit string
(graph6 bit order) over the labelings explored by refinement-guided
backtracking.  Discovered automorphisms prune sibling branches, so highly
symmetric graphs do not blow up the search.
"""
from __future__ import annotations

from typing import Callable, Iterator, List, Optional, Tuple

from .graphs import Graph, bits, popcount, to_graph6, parse_graph6


def _refine(adj, cells: List[List[int]]) -> List[List[int]]:
    """Equitable refinement of an ordered partition.

    Cells are split by neighbor counts into a given splitter cell; subcells
    are ordered by ascending count, which keeps the procedure invariant
    under relabeling.
    """
    cells = [list(c) for c in cells]
    queue = list(range(len(cells)))
    while queue:
        si = queue.pop()
        if si >= len(cells):
            continue
        smask = 0
        for v in cells[si]:
            smask |= 1 << v
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) > 1:
                groups = {}
                for v in cell:
                    groups.setdefault(popcount(adj[v] & smask), []).append(v)
                if len(groups) > 1:
                    parts = [groups[k] for k in sorted(groups)]
                    cells[i : i + 1] = parts
                    for j in range(len(parts)):
                        queue.append(i + j)
                    if si > i:
                        si += len(parts) - 1
                    i += len(parts) - 1
            i += 1
    return cells


def _adj_code(adj, order: List[int]) -> int:
    """Adjacency bits of the relabeled graph, packed most-significant-first.

    Bit order matches graph6 (upper triangle, column-major), prefixed with a
    1 sentinel so leading zero bits are preserved in the integer compare.
    """
    code = 1
    for v in range(1, len(order)):
        rv = adj[order[v]]
        for u in range(v):
            code = code << 1 | (rv >> order[u] & 1)
    return code


class _CanonSearch:
    __slots__ = ("adj", "n", "best_code", "best_order", "autos")

    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.n
        self.best_code = None
        self.best_order = None
        self.autos: List[Tuple[int, ...]] = []

    def run(self) -> List[int]:
        if self.n == 0:
            self.best_order = []
            return []
        cells = _refine(self.adj, [list(range(self.n))])
        self._node(cells, [])
        return self.best_order

    def _node(self, cells, seq) -> None:
        target = None
        for i, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = i
        if target is None:
            order = [c[0] for c in cells]
            code = _adj_code(self.adj, order)
            if self.best_code is None or code < self.best_code:
                self.best_code = code
                self.best_order = order
            elif code == self.best_code:
                # two optimal labelings compose to an automorphism
                prev = self.best_order
                perm = [0] * self.n
                for pos in range(self.n):
                    perm[order[pos]] = prev[pos]
                self.autos.append(tuple(perm))
            return
        explored: List[int] = []
        for v in cells[target]:
            if self._in_explored_orbit(v, seq, explored):
                continue
            explored.append(v)
            newcells = (
                cells[:target] + [[v], [u for u in cells[target] if u != v]] + cells[target + 1 :]
            )
            self._node(_refine(self.adj, newcells), seq + [v])

    def _in_explored_orbit(self, v, seq, explored) -> bool:
        for a in self.autos:
            if (a[v] in explored or any(a[u] == v for u in explored)) and all(
                a[x] == x for x in seq
            ):
                return True
        return False


def canonical_labeling(g: Graph) -> List[int]:
    """Order of original vertices realizing the canonical form.

    ``order[pos]`` is the original vertex placed at canonical position
    ``pos``.
    """
    return _CanonSearch(g).run()


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.permute(perm)


def canonical_form(g: Graph) -> str:
    """Canonical key: graph6 line of the canonically relabeled graph."""
    return to_graph6(canonical_graph(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


# -- isomorph-free exhaustive generation --------------------------------------

def _deletion_vertex(g: Graph, order: List[int]) -> int:
    """Vertex removed by the augmentation rule: the minimum-degree vertex
    at the latest canonical position.  Invariant under relabeling up to
    automorphism, so 'child minus deletion vertex' is a class function."""
    degs = g.degrees()
    dmin = min(degs)
    pos = [0] * g.n
    for p, v in enumerate(order):
        pos[v] = p
    return max((v for v in range(g.n) if degs[v] == dmin), key=lambda v: pos[v])


def _accept_child(child: Graph, child_key: str, parent_key: str) -> bool:
    """Canonical-augmentation test: the child (whose last vertex is the
    new one) is kept only if removing its deletion vertex reproduces the
    parent's isomorphism class."""
    order = canonical_labeling(child)
    w = _deletion_vertex(child, order)
    if w == child.n - 1:
        return True  # child minus the new vertex is literally the parent
    return canonical_form(child.delete_vertices(1 << w)) == parent_key


def children_of(
    parent: Graph,
    parent_key: str,
    extensions: Iterator[int],
    prune: Optional[Callable[[Graph], bool]],
    seen_keys: Optional[set] = None,
) -> Iterator[Tuple[str, Graph]]:
    """Accepted (key, graph) children of one parent over candidate
    neighborhoods.  ``seen_keys`` is this level's global key set; hits are
    skipped without re-testing."""
    n = parent.n
    degs = parent.degrees()
    sibling = set()
    for x in extensions:
        k = popcount(x)
        # the new vertex must end up with minimum degree, else the
        # deletion rule can never select it
        if any(degs[v] + (x >> v & 1) < k for v in range(n)):
            continue
        child = parent.add_vertex(x)
        if prune is not None and not prune(child):
            continue
        key = canonical_form(child)
        if key in sibling:
            continue
        sibling.add(key)
        if seen_keys is not None and key in seen_keys:
            continue
        if _accept_child(child, key, parent_key):
            yield key, child


def _mask_has_edge(adj, mask: int) -> bool:
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        if adj[v] & m:
            return True
    return False


def _mask_has_clique(adj, mask: int, k: int) -> bool:
    if k <= 0:
        return True
    if k == 1:
        return mask != 0
    if k == 2:
        return _mask_has_edge(adj, mask)
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        if popcount(adj[v] & m) >= k - 1 and _mask_has_clique(adj, adj[v] & m, k - 1):
            return True
    return False


def _mask_has_indep(nonadj, mask: int, k: int) -> bool:
    # nonadj[v]: non-neighbors of v (excluding v itself)
    if k <= 0:
        return True
    if k == 1:
        return mask != 0
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        if popcount(nonadj[v] & m) >= k - 1 and _mask_has_indep(nonadj, nonadj[v] & m, k - 1):
            return True
    return False


def clique_alpha_extension_enum(max_clique: int, max_alpha: int):
    """Candidate-neighborhood enumerator for generation pruned by
    omega <= max_clique and alpha <= max_alpha.

    A new-vertex neighborhood X is emitted iff the child keeps both caps
    (X induces no K_{max_clique}, the excluded set has independence below
    max_alpha) and the new vertex can have minimum degree, which is what
    the deletion rule requires of every accepted child.
    """

    def enum(parent: Graph) -> Iterator[int]:
        n = parent.n
        adj = parent.adj
        full = (1 << n) - 1
        nonadj = [full & ~adj[v] & ~(1 << v) for v in range(n)]
        degs = parent.degrees()
        kmax = min(degs) + 1 if n else 0
        out: List[int] = []

        def leaf_ok(x: int, k: int) -> bool:
            for v in range(n):
                if degs[v] + (x >> v & 1) < k:
                    return False
            return True

        def rec(v: int, x: int, exc: int, k: int) -> None:
            if v == n:
                if leaf_ok(x, k):
                    out.append(x)
                return
            # include v unless it closes a K_{max_clique} inside X
            if k < kmax and not _mask_has_clique(adj, adj[v] & x, max_clique - 1):
                rec(v + 1, x | 1 << v, exc, k + 1)
            # exclude v unless the excluded set gains an alpha-breaking
            # independent set or v's degree is already too small
            if degs[v] >= k and not _mask_has_indep(nonadj, nonadj[v] & exc, max_alpha - 1):
                rec(v + 1, x, exc | 1 << v, k)

        rec(0, 0, 0, 0)
        return iter(out)

    return enum


def generate_all_graphs(
    n: int,
    prune: Optional[Callable[[Graph], bool]] = None,
    extension_enum: Optional[Callable[[Graph], Iterator[int]]] = None,
) -> Iterator[Graph]:
    """One representative per isomorphism class of order-n graphs passing
    ``prune``.  The predicate must be monotone under taking induced
    subgraphs (clique and independence caps qualify); this is the caller's
    contract and is not detectable here."""
    for key in generate_all_keys(n, prune, extension_enum=extension_enum):
        yield parse_graph6(key)


def generate_all_keys(
    n: int,
    prune: Optional[Callable[[Graph], bool]] = None,
    extension_enum: Optional[Callable[[Graph], Iterator[int]]] = None,
    progress: Optional[Callable[[int, int], None]] = None,
) -> List[str]:
    """Canonical keys of all order-n classes passing ``prune``, sorted.

    ``extension_enum(parent)`` may narrow the candidate neighborhoods; it
    must be a superset of the neighborhoods of deletion vertices of every
    surviving child (the clique/alpha-aware enumerator below qualifies).
    """
    if n == 0:
        k0 = Graph._make(0, ())
        if prune is not None and not prune(k0):
            return []
        return [to_graph6(k0)]
    k1 = Graph._make(1, (0,))
    if prune is not None and not prune(k1):
        return []
    level = [canonical_form(k1)]
    for m in range(2, n + 1):
        nxt: set = set()
        done = 0
        for pkey in level:
            parent = parse_graph6(pkey)
            exts = (
                extension_enum(parent)
                if extension_enum is not None
                else range(1 << parent.n)
            )
            for key, _child in children_of(parent, pkey, exts, prune, nxt):
                nxt.add(key)
            done += 1
            if progress is not None:
                progress(m, done)
        level = sorted(nxt)
    return level
