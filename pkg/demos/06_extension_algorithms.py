"""Extension searches: building larger family members from smaller ones.

Three complementary moves:
 * algorithm_extend  - attach s new independent vertices to H, with
   neighborhoods drawn from M(H) under compatibility conditions, to find
   maximal members of order |H| + s;
 * sperner_extensions - duplicate a vertex (the Sperner case);
 * edge_removal_closure - walk downward from maximal members by single
   edge removals, keeping everything that stays in the family.
"""
from folkman import (
    FamilyParams,
    cycle_graph,
    algorithm_extend,
    complete_graph,
    edge_removal_closure,
    filter_family,
    generate_all_graphs,
    sperner_extensions,
)


def main() -> None:
    # seed: L_+K3(6;3;<=3), i.e. order-6 graphs with K3 + G ->e (3,3)
    seeds, _ = filter_family(
        generate_all_graphs(6), FamilyParams(6, 3, 3, variant="plusK3")
    )
    print(f"seeds |L+K3(6;3;<=3)| = {len(seeds)}")

    # attach s = 3 independent vertices: candidates for L_max(9;2;3)
    out, counts = algorithm_extend(seeds.graphs(), 9, 2, 3)
    print(f"algorithm_extend -> {len(out)} maximal members of order 9")
    print(f"  counts: {counts}")

    # Sperner route: vertex duplication
    sp = sperner_extensions(seeds.graphs(), 3, 3)
    print(f"sperner_extensions -> {len(sp)} order-7 Sperner members")

    # downward closure by edge removal (seeds must be K4-free)
    octa = complete_graph(6)
    for a, b in ((0, 1), (2, 3), (4, 5)):
        octa = octa.remove_edge(a, b)
    closure, ccounts = edge_removal_closure([octa], 3, max_removals=3)
    print(f"edge_removal_closure(octahedron, p=3, depth 3) -> {len(closure)} members")
    print(f"  visited={ccounts['visited']}, pruned={ccounts['pruned']}")


if __name__ == "__main__":
    main()
