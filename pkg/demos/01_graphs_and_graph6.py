"""Graphs as immutable bitmask structures, and the graph6 line format.

Every graph in this package is a tuple of adjacency bitmasks.  Edits
return new graphs, so stores and caches can hold them safely, and the
graph6 codec gives a one-line ASCII form that round-trips exactly.
"""
from folkman import (
    Graph,
    complete_graph,
    cycle_graph,
    make_graph,
    parse_graph6,
    to_graph6,
)


def main() -> None:
    c5 = cycle_graph(5)
    print(f"C5: n={c5.n}, edges={c5.edge_list()}")
    print(f"C5 adjacency rows (bitmasks): {[bin(a) for a in c5.adj]}")

    # edits are persistent: the original is untouched
    c5_plus = c5.add_edge(0, 2)
    print(f"added chord (0,2): {c5_plus.edge_count} edges; original still {c5.edge_count}")

    # graph6 round-trips byte-exactly, including the >= 63 vertex header
    for g in (complete_graph(2), complete_graph(5), cycle_graph(5)):
        line = to_graph6(g)
        assert parse_graph6(line) == g
        print(f"graph6({g.n} vertices, {g.edge_count} edges) = {line!r}")

    big = make_graph(63, [(i, (i + 1) % 63) for i in range(63)])
    line = to_graph6(big)
    print(f"C63 uses the long form: starts with {line[:5]!r}, length {len(line)}")
    assert parse_graph6(line) == big

    # complement is an involution
    g = parse_graph6("DR[")
    assert g.complement().complement() == g
    print("complement twice is the identity: OK")


if __name__ == "__main__":
    main()
