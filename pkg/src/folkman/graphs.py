"""Immutable bitmask graphs and graph6 serialization.

Vertices are 0-based contiguous integers.  The neighbor set of each vertex
is stored as a Python int used as a bitmask, so there is no hard order cap;
everything in the pipeline stays below a few hundred vertices.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph construction or malformed graph6 input."""


def popcount(x: int) -> int:
    return x.bit_count() if hasattr(x, "bit_count") else bin(x).count("1")


def bits(mask: int) -> Iterator[int]:
    """Iterate over the set bit positions of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph, immutable after construction.

    ``adj[v]`` is the neighbor bitmask of vertex ``v``; the adjacency is
    symmetric and irreflexive, and all set bits are ``< n``.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise GraphError("negative order")
        if len(adj) != n:
            raise GraphError("adjacency length does not match order")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError("neighbor bit out of range")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
        for v in range(n):
            for u in bits(adj[v]):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency at ({v}, {u})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))

    # Internal constructor skipping validation; rows must already be a
    # symmetric, irreflexive tuple.
    @classmethod
    def _make(cls, n: int, adj: tuple) -> "Graph":
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    def __setattr__(self, *a):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph({self.n}, edges={self.edge_list()})"

    # -- basic queries -------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list:
        return [popcount(row) for row in self.adj]

    @property
    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def edge_list(self) -> list:
        """Edges as (u, v) with u < v, sorted lexicographically.

        This ordering is the single source of the edge-to-variable mapping
        used by the CNF encoding.
        """
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(row):
                out.append((u, v))
        return out

    def non_edges(self) -> list:
        out = []
        full = (1 << self.n) - 1
        for u in range(self.n):
            row = (full & ~self.adj[u] & ~(1 << u)) >> (u + 1) << (u + 1)
            for v in bits(row):
                out.append((u, v))
        return out

    # -- pure editing operations ----------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise GraphError("loop edge")
        if self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) already present")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._make(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) not present")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._make(self.n, tuple(adj))

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph._make(
            self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj))
        )

    def add_vertex(self, nbrs: int) -> "Graph":
        """Append a new vertex whose neighborhood is the mask ``nbrs``."""
        if nbrs >> self.n:
            raise GraphError("neighborhood bit out of range")
        new = self.n
        adj = [row | ((nbrs >> v & 1) << new) for v, row in enumerate(self.adj)]
        adj.append(nbrs)
        return Graph._make(new + 1, tuple(adj))

    def duplicate_vertex(self, v: int) -> "Graph":
        """Add a twin of ``v``: same neighborhood, non-adjacent to ``v``."""
        if not 0 <= v < self.n:
            raise GraphError("vertex out of range")
        return self.add_vertex(self.adj[v])

    def delete_vertices(self, drop: int) -> "Graph":
        """Induced subgraph on the vertices outside the mask ``drop``.

        Remaining vertices are relabeled by order-preserving compaction.
        """
        if drop >> self.n:
            raise GraphError("vertex bit out of range")
        keep = [v for v in range(self.n) if not drop >> v & 1]
        pos = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            for u in bits(self.adj[v] & ~drop):
                row |= 1 << pos[u]
            adj.append(row)
        return Graph._make(len(keep), tuple(adj))

    def subgraph(self, keep_mask: int) -> "Graph":
        full = (1 << self.n) - 1
        return self.delete_vertices(full & ~keep_mask)

    def permute(self, perm: Sequence[int]) -> "Graph":
        """Relabeled copy; vertex v of self becomes perm[v]."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph._make(self.n, tuple(adj))


def make_graph(order: int, edges: Iterable) -> Graph:
    """Build a graph from an explicit edge list; duplicates collapse."""
    if order < 0:
        raise GraphError("negative order")
    adj = [0] * order
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"endpoint out of range in ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._make(order, tuple(adj))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._make(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)]) if n >= 3 else empty_graph(n)


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def empty_graph(n: int) -> Graph:
    return Graph._make(n, (0,) * n)


def join_complete(p: int, g: Graph) -> Graph:
    """K_p + g: p mutually adjacent vertices, each adjacent to all of g."""
    if p < 0:
        raise GraphError("negative join size")
    n = p + g.n
    kp_row = (1 << n) - 1
    adj = [kp_row & ~(1 << v) for v in range(p)]
    low = (1 << p) - 1
    for row in g.adj:
        adj.append((row << p) | low)
    return Graph._make(n, tuple(adj))


# -- graph6 -----------------------------------------------------------------

_G6_MAX = 258047  # largest order of the 4-byte header form


def _g6_header(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= _G6_MAX:
        return bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise GraphError("order too large for graph6")


def to_graph6(g: Graph) -> str:
    """Bit-exact graph6 line for the labeled graph (no trailing newline)."""
    n = g.n
    out = bytearray(_g6_header(n))
    group = 0
    nbits = 0
    for v in range(1, n):
        col = g.adj[v]
        for u in range(v):
            group = group << 1 | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(group + 63)
                group = 0
                nbits = 0
    if nbits:
        out.append((group << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 line; a leading '>>graph6<<' header is tolerated."""
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise GraphError("empty graph6 line")
    data = line.encode("ascii", errors="strict") if line.isascii() else None
    if data is None or any(b < 63 or b > 126 for b in data):
        raise GraphError("non-printable byte in graph6 line")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise GraphError("graph6 orders above 258047 unsupported")
        if len(data) < 4:
            raise GraphError("truncated graph6 length header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphError(
            f"graph6 body length {len(body)} does not match order {n} (expected {need})"
        )
    adj = [0] * n
    bitpos = 0
    for b in body:
        group = b - 63
        for k in range(5, -1, -1):
            if bitpos >= n * (n - 1) // 2:
                if group >> k & 1:
                    raise GraphError("nonzero padding bits in graph6 line")
                continue
            if group >> k & 1:
                v = _g6_col(bitpos)
                u = bitpos - v * (v - 1) // 2
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            bitpos += 1
    return Graph._make(n, tuple(adj))


def _g6_col(bitpos: int) -> int:
    # column v of the upper triangle contains bits [v(v-1)/2, v(v+1)/2)
    v = int(((8 * bitpos + 1) ** 0.5 + 1) / 2)
    while v * (v - 1) // 2 > bitpos:
        v -= 1
    while (v + 1) * v // 2 <= bitpos:
        v += 1
    return v


def read_graph6_file(path) -> Iterator[Graph]:
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield parse_graph6(line)


def write_graph6_file(path, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")
            count += 1
    return count
