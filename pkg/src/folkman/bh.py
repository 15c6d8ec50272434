"""The triangle-cover extension B(H) and its arrowing checks.

B(H) appends one new independent vertex per inclusion-maximal
triangle-free vertex subset of H, adjacent to exactly that subset.  If a
graph with clique number 3 arrows (3, 3), so does B of the graph minus any
independent set; the large-scale verification rests on checking that no
B(H) over the relevant base family arrows.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from .arrow import arrows_edge
from .canon import canonical_form
from .graphs import Graph, bits, popcount
from .invariants import clique_number, maximal_triangle_free_subsets, triangle_in_mask


class BhError(ValueError):
    pass


@dataclass(frozen=True)
class BhGraph:
    graph: Graph
    base_order: int
    added: int

    def __post_init__(self):
        if self.graph.n != self.base_order + self.added:
            raise BhError("order mismatch")


def build_bh(h: Graph) -> BhGraph:
    """B(H) with the added vertices appended in the enumeration order of
    the maximal triangle-free subsets (ascending bitmask)."""
    msets = maximal_triangle_free_subsets(h)
    g = h
    for m in msets:
        g = g.add_vertex(m)
    bh = BhGraph(g, h.n, len(msets))
    _validate_bh(h, bh, msets)
    return bh


def _validate_bh(h: Graph, bh: BhGraph, msets: List[int]) -> None:
    base_mask = (1 << h.n) - 1
    for i, m in enumerate(msets):
        u = h.n + i
        row = bh.graph.adj[u]
        if row & ~base_mask:
            raise BhError("added vertices must stay independent")
        if row != m:
            raise BhError("added neighborhood drifted from its subset")
        if triangle_in_mask(h, m):
            raise BhError("added neighborhood is not triangle-free")


def theorem1_check(
    h_graphs: Iterable[Graph],
    engine: str = "sat",
    report_path: Optional[str] = None,
    checkpoint_every: int = 10_000,
) -> Dict:
    """Check B(H) for arrowing over a base family; the expected outcome at
    full scale is zero positives.  Each negative verdict's witness re-check
    happens inside the arrowing call; the report records one line per H."""
    positives: List[str] = []
    checked = 0
    fh = open(report_path, "w", encoding="ascii") if report_path else None
    try:
        for h in h_graphs:
            bh = build_bh(h)
            verdict = arrows_edge(bh.graph, engine=engine)
            key = canonical_form(h)
            if verdict.arrows:
                positives.append(key)
            if fh:
                wdig = (
                    "".join(str(c) for c in verdict.witness)
                    if verdict.witness is not None
                    else "-"
                )
                fh.write(f"{key} {bh.graph.n} {int(verdict.arrows)} {wdig}\n")
                checked += 1
                if checkpoint_every and checked % checkpoint_every == 0:
                    fh.flush()
            else:
                checked += 1
    finally:
        if fh:
            fh.close()
    return {"checked": checked, "positives": positives}


def lemma41_shadow_check(g: Graph, a: int, engine: str = "sat") -> bool:
    """Instance check of the implication: if g arrows (3, 3) then so does
    B(g - a), for omega(g) = 3 and a an independent set.  A False return
    would be a build-stopping defect upstream."""
    if clique_number(g) != 3:
        raise BhError("base graph must have clique number exactly 3")
    for v in bits(a):
        if g.adj[v] & a:
            raise BhError("set is not independent")
    lhs = arrows_edge(g, engine=engine).arrows
    rhs = arrows_edge(build_bh(g.delete_vertices(a)).graph, engine=engine).arrows
    return (not lhs) or rhs
