"""The L(n;p;s) families and their filters.

L(n;p) collects the K4-free graphs G of order n with K_p + G ->e (3,3);
the s parameter bounds (or pins) the independence number, and the variant
selects the maximal-K4-free or the +K3 (diameter <= 2) subfamily.  The
filter reports ordered rejection tallies so runs are auditable.
"""
from folkman import (
    FamilyParams,
    classify,
    clique_alpha_extension_enum,
    cycle_graph,
    filter_family,
    family_possibly_nonempty,
    generate_all_graphs,
    ramsey_constants,
)


def main() -> None:
    params = FamilyParams(7, 3, 4, variant="plusK3")
    print(f"family: {params.label()}")

    pool = list(generate_all_graphs(7))
    store, tallies = filter_family(pool, params)
    print(f"filtered {len(pool)} order-7 graphs -> {len(store)} members")
    print("rejection tallies (applied in order):")
    for name, count in tallies.items():
        print(f"  {name:>16} {count}")

    # classify one graph in detail
    c = classify(cycle_graph(7), params.p)
    print(f"C7 classification: member={c.member}, alpha={c.alpha}, "
          f"maximal={c.maximal_k4_free}")

    # feasibility prechecks from the known Ramsey numbers
    print(f"known Ramsey constants: {ramsey_constants()}")
    print(f"L(9;2;<=2) possibly nonempty: "
          f"{family_possibly_nonempty(FamilyParams(9, 2, 2))}"
          "  (R(4,3) = 9: no K4-free order-9 graph has alpha <= 2)")


if __name__ == "__main__":
    main()
