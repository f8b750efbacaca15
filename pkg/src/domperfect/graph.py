"""Immutable simple graphs on at most 62 vertices, stored as adjacency bitmasks.

A vertex set is a plain ``int`` whose bit ``v`` is set when vertex ``v`` belongs
to the set.  Graph ``g`` keeps one neighbour mask per vertex in ``g.adj``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 62

VertexSet = int


class GraphError(ValueError):
    """Raised for malformed graph input (bad edges, bad graph6, order too large)."""


def bits(vs: VertexSet) -> Iterator[int]:
    """Yield the members of a vertex set in ascending order."""
    while vs:
        low = vs & -vs
        yield low.bit_length() - 1
        vs ^= low


def vset(vertices: Iterable[int]) -> VertexSet:
    s = 0
    for v in vertices:
        s |= 1 << v
    return s


def popcount(x: int) -> int:
    return x.bit_count()


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def closed(self, v: int) -> VertexSet:
        """Closed neighbourhood N[v]."""
        return self.adj[v] | (1 << v)

    def neighbourhood(self, s: VertexSet) -> VertexSet:
        """N(s): union of open neighbourhoods of the members of ``s``."""
        out = 0
        for v in bits(s):
            out |= self.adj[v]
        return out

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, g6={format_graph6(self)!r})"


def _unchecked(n: int, adj: Iterable[int]) -> Graph:
    # Internal constructor for adjacency produced by operations that already
    # preserve the invariants; skips the O(n^2) validation.
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", tuple(adj))
    return g


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop ({u},{v}) not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return _unchecked(n, adj)


def empty_graph(n: int) -> Graph:
    return from_edge_list(n, [])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return _unchecked(n, [full ^ (1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(k: int) -> Graph:
    """K_{1,k}; vertex 0 is the centre."""
    return from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)])


def parse_graph6(line: str | bytes) -> Graph:
    """Decode a graph6 word (single size byte, so n <= 62)."""
    if isinstance(line, bytes):
        line = line.decode("ascii")
    word = line.strip()
    if word.startswith(">>graph6<<"):
        word = word[10:]
    if not word:
        raise GraphError("empty graph6 word")
    codes = [ord(c) - 63 for c in word]
    if any(not 0 <= c <= 63 for c in codes):
        raise GraphError(f"graph6 byte outside 63..126 in {word!r}")
    n = codes[0]
    if n > MAX_ORDER:
        raise GraphError(f"graph6 order {n} (long form) not supported")
    nbits = n * (n - 1) // 2
    groups = (nbits + 5) // 6
    if len(codes) - 1 != groups:
        raise GraphError(f"graph6 word {word!r} has {len(codes) - 1} data bytes, expected {groups}")
    stream = 0
    for c in codes[1:]:
        stream = stream << 6 | c
    pad = groups * 6 - nbits
    if stream & ((1 << pad) - 1):
        raise GraphError(f"graph6 word {word!r} has nonzero padding bits")
    stream >>= pad
    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if stream >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return _unchecked(n, adj)


def format_graph6(g: Graph) -> str:
    n = g.n
    stream = 0
    nbits = 0
    adj = g.adj
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            stream = stream << 1 | (row >> i & 1)
        nbits += j
    groups = (nbits + 5) // 6
    stream <<= groups * 6 - nbits
    out = [chr(n + 63)]
    for k in range(groups - 1, -1, -1):
        out.append(chr((stream >> (6 * k) & 63) + 63))
    return "".join(out)


def complement(g: Graph) -> Graph:
    full = g.vertices
    return _unchecked(g.n, [full ^ row ^ (1 << v) for v, row in enumerate(g.adj)])


def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    """Subgraph induced by ``s``, relabelled 0..|s|-1 in ascending original order."""
    if s & ~g.vertices:
        raise GraphError("vertex set contains vertices outside the graph")
    keep = list(bits(s))
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for w in bits(g.adj[v] & s):
            row |= 1 << pos[w]
        adj.append(row)
    return _unchecked(len(keep), adj)


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, g.vertices & ~(1 << v))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    adj = [0] * g.n
    for v, row in enumerate(g.adj):
        img = 0
        for w in bits(row):
            img |= 1 << perm[w]
        adj[perm[v]] = img
    return _unchecked(g.n, adj)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return _unchecked(g.n + h.n, list(g.adj) + [row << shift for row in h.adj])


def add_vertex(g: Graph, neighbours: VertexSet) -> Graph:
    """Append vertex ``g.n`` adjacent to ``neighbours``."""
    v = g.n
    adj = [row | ((neighbours >> u & 1) << v) for u, row in enumerate(g.adj)]
    adj.append(neighbours)
    return from_adjacency(g.n + 1, adj)


def from_adjacency(n: int, adj: Iterable[int]) -> Graph:
    return Graph(n, tuple(adj))


INFINITE = None


def diameter(g: Graph) -> int | None:
    """Largest distance between two vertices; ``None`` if ``g`` is disconnected."""
    if g.n == 0:
        raise GraphError("diameter of the order-0 graph is undefined")
    full = g.vertices
    worst = 0
    for v in range(g.n):
        seen = frontier = 1 << v
        d = 0
        while seen != full:
            nxt = 0
            for w in bits(frontier):
                nxt |= g.adj[w]
            nxt &= ~seen
            if not nxt:
                return INFINITE
            seen |= nxt
            frontier = nxt
            d += 1
        worst = max(worst, d)
    return worst


def is_connected(g: Graph) -> bool:
    return g.n == 0 or diameter(g) is not None


def is_triangle_free(g: Graph) -> bool:
    adj = g.adj
    for u in range(g.n):
        for v in bits(adj[u] >> (u + 1) << (u + 1)):
            if adj[u] & adj[v]:
                return False
    return True
