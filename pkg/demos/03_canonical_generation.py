"""Canonical forms and isomorph-free exhaustive generation.

The canonical form of a graph is a graph6 line that is identical for all
relabelings, so isomorphism testing is string equality and stores are
plain sets of lines.  Generation by canonical augmentation visits each
isomorphism class exactly once, optionally pruned by hereditary caps on
clique and independence number.
"""
from folkman import (
    are_isomorphic,
    canonical_form,
    clique_alpha_extension_enum,
    cycle_graph,
    generate_all_graphs,
    make_graph,
    parse_graph6,
)


def main() -> None:
    c5 = cycle_graph(5)
    shuffled = c5.permute([3, 1, 4, 0, 2])
    print(f"canonical_form(C5)           = {canonical_form(c5)!r}")
    print(f"canonical_form(shuffled C5)  = {canonical_form(shuffled)!r}")
    assert are_isomorphic(c5, shuffled)

    # the cube and the "twisted" cube have the same degree sequence but
    # are not isomorphic
    cube = make_graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6),
                          (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)])
    twisted = make_graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6),
                             (6, 7), (7, 4), (0, 4), (1, 5), (2, 7), (3, 6)])
    print(f"cube ~ twisted cube: {are_isomorphic(cube, twisted)}")

    # exhaustive generation: one representative per isomorphism class
    for n in range(1, 8):
        count = sum(1 for _ in generate_all_graphs(n))
        print(f"graphs on {n} vertices: {count}")

    # pruned generation: all K4-free graphs with alpha <= 3 on 8 vertices,
    # i.e. the Ramsey graphs R(4,4;8)
    enum = clique_alpha_extension_enum(3, 3)
    r44 = sum(1 for _ in generate_all_graphs(8, extension_enum=enum))
    print(f"(4,4)-Ramsey graphs on 8 vertices: {r44}")


if __name__ == "__main__":
    main()
