"""Exact invariants: clique number, independence number, chromatic number,
degree extremes, and the structural predicates the family filters use.
"""
from folkman import (
    chromatic_number,
    clique_number,
    complete_graph,
    cycle_graph,
    independence_number,
    is_maximal_k4_free,
    is_plus_k3,
    is_sperner,
    make_graph,
    maximal_triangle_free_subsets,
)

# the Grotzsch graph: triangle-free yet 4-chromatic
GROTZSCH = make_graph(
    11,
    [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
        (0, 6), (0, 9), (1, 7), (1, 10), (2, 6),
        (2, 8), (3, 7), (3, 9), (4, 8), (4, 10),
        (5, 6), (5, 7), (5, 8), (5, 9), (5, 10),
    ],
)


def main() -> None:
    g = GROTZSCH
    print(f"Grotzsch graph: omega={clique_number(g)}, chi={chromatic_number(g)}, "
          f"alpha={independence_number(g)}")

    c5 = cycle_graph(5)
    print(f"C5 is +K3 (connected, diameter <= 2): {is_plus_k3(c5)}")
    print(f"C5 is Sperner (two vertices with N(u) subset of N(v)): {is_sperner(c5)}")

    # the octahedron K_{2,2,2} is a maximal K4-free graph
    octa = complete_graph(6)
    for a, b in ((0, 1), (2, 3), (4, 5)):
        octa = octa.remove_edge(a, b)
    print(f"octahedron maximal K4-free: {is_maximal_k4_free(octa)}")

    # M(H): maximal triangle-free vertex subsets, as bitmasks
    msets = maximal_triangle_free_subsets(c5)
    print(f"M(C5) = {[bin(m) for m in msets]}  (the whole vertex set)")
    msets_k4 = maximal_triangle_free_subsets(complete_graph(4))
    print(f"|M(K4)| = {len(msets_k4)}  (the six edges)")


if __name__ == "__main__":
    main()
