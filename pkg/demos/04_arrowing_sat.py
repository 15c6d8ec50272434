"""Edge and vertex Ramsey arrowing via SAT.

G arrows (3,3) on edges iff every 2-coloring of E(G) has a monochromatic
triangle; this is the unsatisfiability of a CNF with one variable per
edge and two clauses per triangle.  Negative verdicts carry a good
coloring as a machine-checkable witness.
"""
from folkman import (
    ArrowSpec,
    arrows_edge,
    arrows_vertex,
    check_edge_witness,
    complete_graph,
    cycle_graph,
    encode_cnf_33,
    export_dimacs,
    member_L,
)


def main() -> None:
    k6 = complete_graph(6)
    v = arrows_edge(k6)
    print(f"K6 ->e (3,3): {v.arrows}  (R(3,3) = 6)")

    k6e = k6.remove_edge(0, 1)
    v = arrows_edge(k6e)
    print(f"K6-e ->e (3,3): {v.arrows}")
    print(f"  witness coloring: {''.join(map(str, v.witness))}")
    print(f"  witness re-checks: {check_edge_witness(k6e, v.witness)}")

    # the CNF itself, exportable as DIMACS for external solvers
    cnf = encode_cnf_33(complete_graph(4))
    print(f"CNF for K4: {cnf.variable_count} variables, {len(cnf.clauses)} clauses")
    print(export_dimacs(cnf).splitlines()[0])

    # vertex arrowing: K_n ->v (3,3) iff n >= 5
    for n in (4, 5):
        v = arrows_vertex(complete_graph(n), ArrowSpec("vertex", (3, 3)))
        print(f"K{n} ->v (3,3): {v.arrows}")

    # membership in L(n;p): K_p + G ->e (3,3) with omega(G) < 4
    print(f"C5 in L(5;3): {member_L(cycle_graph(5), 3)}  (K3 + C5 = W5 + hub pair)")
    print(f"C5 in L(5;2): {member_L(cycle_graph(5), 2)}")

    # engines cross-check: SAT and an independent backtracking colorer
    v = arrows_edge(k6, engine="both")
    print(f"K6 with engine='both' (cross-checked): {v.arrows}")


if __name__ == "__main__":
    main()
