"""Ramsey arrowing decisions, witnesses, and the triangle CNF encoding.

Edge arrowing of (3, 3) is decided through satisfiability of the triangle
formula: one variable per edge, and for every triangle the pair of clauses
forbidding it from being monochromatic in either color.  The graph arrows
(3, 3) exactly when that formula is unsatisfiable.  A direct backtracking
colorer serves as the independent cross-check oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .graphs import Graph, bits, join_complete, popcount
from .invariants import chromatic_number, clique_number, has_clique
from .sat import CnfFormula, SatResult, solve_cnf, solve_external


class ArrowError(ValueError):
    pass


@dataclass(frozen=True)
class ArrowSpec:
    mode: str  # "edge" | "vertex"
    targets: Tuple[int, ...]

    def __post_init__(self):
        if self.mode not in ("edge", "vertex"):
            raise ArrowError(f"unknown mode {self.mode!r}")
        if len(self.targets) < 2:
            raise ArrowError("at least two colors required")
        if any(a < 2 for a in self.targets):
            raise ArrowError("clique targets must be >= 2")


EDGE_33 = ArrowSpec("edge", (3, 3))


@dataclass(frozen=True)
class ArrowVerdict:
    arrows: bool
    witness: Optional[Tuple[int, ...]] = None  # color per edge/vertex index

    def __post_init__(self):
        if self.arrows and self.witness is not None:
            raise ArrowError("positive verdicts carry no witness")


def triangle_edge_triples(g: Graph) -> List[Tuple[int, int, int]]:
    """Edge-index triples of all triangles, from lexicographic vertex
    triples; fixes the clause order so CNF output is byte-stable."""
    edges = g.edge_list()
    eidx = {e: i for i, e in enumerate(edges)}
    out = []
    adj = g.adj
    for u in range(g.n):
        ru = adj[u] >> (u + 1) << (u + 1)
        for v in bits(ru):
            common = adj[u] & adj[v] >> (v + 1) << (v + 1)
            for w in bits(common):
                out.append((eidx[(u, v)], eidx[(u, w)], eidx[(v, w)]))
    return out


def encode_cnf_33(g: Graph) -> CnfFormula:
    """One variable per edge (edge_list order, 1-based); two clauses per
    triangle and nothing else."""
    clauses = []
    for i, j, k in triangle_edge_triples(g):
        clauses.append((i + 1, j + 1, k + 1))
        clauses.append((-(i + 1), -(j + 1), -(k + 1)))
    return CnfFormula(len(g.edge_list()), tuple(clauses))


def check_edge_witness(g: Graph, colors: Sequence[int], targets=(3, 3)) -> bool:
    """Re-check a 2-coloring of edges: valid iff no monochromatic triangle."""
    edges = g.edge_list()
    if len(colors) != len(edges) or any(c not in (0, 1) for c in colors):
        return False
    if targets != (3, 3):
        raise ArrowError("edge witnesses only supported for targets (3, 3)")
    for i, j, k in triangle_edge_triples(g):
        if colors[i] == colors[j] == colors[k]:
            return False
    return True


def _backtrack_good_coloring(g: Graph) -> Optional[Tuple[int, ...]]:
    """Direct search for a triangle-avoiding 2-edge-coloring; independent
    of the SAT path."""
    edges = g.edge_list()
    m = len(edges)
    tris = triangle_edge_triples(g)
    by_edge: List[List[Tuple[int, int]]] = [[] for _ in range(m)]
    for i, j, k in tris:
        by_edge[i].append((j, k))
        by_edge[j].append((i, k))
        by_edge[k].append((i, j))
    colors = [-1] * m

    def rec(i: int) -> bool:
        if i == m:
            return True
        for c in (0, 1):
            ok = True
            for a, b in by_edge[i]:
                if colors[a] == c and colors[b] == c:
                    ok = False
                    break
            if ok:
                colors[i] = c
                if rec(i + 1):
                    return True
                colors[i] = -1
        return False

    return tuple(colors) if rec(0) else None


def arrows_edge(
    g: Graph,
    spec: ArrowSpec = EDGE_33,
    engine: str = "sat",
    external_solver: Optional[str] = None,
) -> ArrowVerdict:
    """Does every 2-edge-coloring contain a monochromatic triangle?

    engine: 'sat' (built-in CDCL on the triangle CNF), 'backtrack' (direct
    coloring search), or 'both' (cross-check; disagreement raises).
    """
    if spec.mode != "edge" or spec.targets != (3, 3):
        raise ArrowError("edge arrowing implemented for targets (3, 3) only")
    verdicts = {}
    if engine in ("sat", "both"):
        cnf = encode_cnf_33(g)
        res = solve_external(cnf, external_solver) if external_solver else solve_cnf(cnf)
        verdicts["sat"] = _verdict_from_sat(g, res)
    if engine in ("backtrack", "both"):
        colors = _backtrack_good_coloring(g)
        verdicts["backtrack"] = (
            ArrowVerdict(True) if colors is None else ArrowVerdict(False, colors)
        )
    if engine == "both" and verdicts["sat"].arrows != verdicts["backtrack"].arrows:
        raise ArrowError(
            f"decision procedures disagree on {g!r}: "
            f"sat={verdicts['sat'].arrows} backtrack={verdicts['backtrack'].arrows}"
        )
    if engine not in ("sat", "backtrack", "both"):
        raise ArrowError(f"unknown engine {engine!r}")
    verdict = verdicts.get("sat", verdicts.get("backtrack"))
    if not verdict.arrows and not check_edge_witness(g, verdict.witness):
        raise ArrowError("witness failed re-check; decision procedure defect")
    return verdict


def _verdict_from_sat(g: Graph, res: SatResult) -> ArrowVerdict:
    if not res.sat:
        return ArrowVerdict(True)
    m = len(g.edge_list())
    colors = tuple(1 if res.model[i + 1] else 0 for i in range(m))
    return ArrowVerdict(False, colors)


def check_vertex_witness(g: Graph, colors: Sequence[int], targets) -> bool:
    if len(colors) != g.n or any(not 0 <= c < len(targets) for c in colors):
        return False
    for i, a in enumerate(targets):
        mask = 0
        for v, c in enumerate(colors):
            if c == i:
                mask |= 1 << v
        if has_clique(g.subgraph(mask), a):
            return False
    return True


def arrows_vertex(g: Graph, spec: ArrowSpec) -> ArrowVerdict:
    """Vertex-coloring arrowing for s in {2, 3} colors, targets <= 4.

    Backtracking over vertex colors; assigning v to color i is rejected as
    soon as it completes an a_i-clique inside color class i.
    """
    if spec.mode != "vertex":
        raise ArrowError("vertex spec required")
    targets = spec.targets
    if len(targets) not in (2, 3) or any(a > 4 for a in targets):
        raise ArrowError("vertex arrowing limited to 2-3 colors, targets <= 4")
    n = g.n
    adj = g.adj
    order = sorted(range(n), key=lambda v: -popcount(adj[v]))
    masks = [0] * len(targets)
    colors = [-1] * n

    def completes_clique(v: int, i: int) -> bool:
        from .canon import _mask_has_clique

        return _mask_has_clique(adj, adj[v] & masks[i], targets[i] - 1)

    def rec(idx: int) -> bool:
        # True = a good coloring exists (no arrowing)
        if idx == n:
            return True
        v = order[idx]
        for i in range(len(targets)):
            if not completes_clique(v, i):
                masks[i] |= 1 << v
                colors[v] = i
                if rec(idx + 1):
                    return True
                masks[i] &= ~(1 << v)
                colors[v] = -1
        return False

    if rec(0):
        witness = tuple(colors)
        if not check_vertex_witness(g, witness, targets):
            raise ArrowError("vertex witness failed re-check")
        return ArrowVerdict(False, witness)
    return ArrowVerdict(True)


# -- membership in L(n; p) ----------------------------------------------------

def member_L(
    g: Graph,
    p: int,
    engine: str = "sat",
    use_chi_filter: bool = True,
    external_solver: Optional[str] = None,
) -> bool:
    """G in L(n; p): omega(G) < 4 and K_p + G edge-arrows (3, 3).

    The chromatic pre-filter chi(G) >= 6 - p is a proved necessary
    condition used purely as a short-circuit; it never changes the answer.
    """
    if has_clique(g, 4):
        return False
    if use_chi_filter and p < 6 and chromatic_number(g) < 6 - p:
        return False
    return arrows_edge(join_complete(p, g), engine=engine, external_solver=external_solver).arrows


def is_vertex_critical(g: Graph, check_membership: bool = True) -> bool:
    """Arrowing destroyed by every single-vertex deletion."""
    if check_membership and not member_L(g, 0):
        raise ArrowError("not a member of H_e(3, 3; 4)")
    return all(
        not arrows_edge(g.delete_vertices(1 << v)).arrows for v in range(g.n)
    )


def is_edge_critical(g: Graph, check_membership: bool = True) -> bool:
    """Arrowing destroyed by every single-edge deletion."""
    if check_membership and not member_L(g, 0):
        raise ArrowError("not a member of H_e(3, 3; 4)")
    return all(
        not arrows_edge(g.remove_edge(u, v)).arrows for u, v in g.edge_list()
    )
