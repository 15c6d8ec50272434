"""The B(H) construction.

B(H) extends H by one new vertex per maximal triangle-free vertex subset
of H, each joined to exactly that subset; the new vertices form an
independent set.  If omega(H) = 3 the construction stays K5-free, and
whether some B(H) arrows (3,3) on edges is the question the checker
reports on.
"""
from folkman import (
    arrows_edge,
    build_bh,
    complete_graph,
    cycle_graph,
    lemma41_shadow_check,
    theorem1_check,
)


def main() -> None:
    # M(C5) is the whole vertex set, so B(C5) is the 5-wheel
    bh = build_bh(cycle_graph(5))
    print(f"B(C5): {bh.graph.n} vertices (base {bh.base_order} + added {bh.added})")
    print(f"  hub degree: {bh.graph.degree(5)}")
    print(f"  B(C5) ->e (3,3): {arrows_edge(bh.graph).arrows}")

    bh3 = build_bh(complete_graph(3))
    print(f"B(K3): base 3 + one vertex per edge = {bh3.graph.n} vertices")

    # batch report: graph6 key, order, arrowing verdict, witness or '-'
    result = theorem1_check([cycle_graph(5), complete_graph(3)])
    print(f"theorem1_check: checked={result['checked']}, positives={result['positives']}")

    # the shadow consistency check behind deleting an independent set A:
    # if H arrows, B(H - A) must arrow too
    g = complete_graph(3)
    print(f"lemma41_shadow_check(K3, A={{}}) holds: {lemma41_shadow_check(g, 0)}")


if __name__ == "__main__":
    main()
