"""Canonical labelling, isomorphism and induced-subgraph embedding search.

The canonical labelling is individualisation-refinement: refine the ordered
partition to an equitable one, individualise a vertex of the first smallest
non-trivial cell, and recurse.  Leaves are compared by the relabelled
adjacency rows; the largest wins.  Automorphisms discovered at equal leaves
prune sibling subtrees (orbit pruning on generators fixing the current prefix)
and trigger a backjump to the point of divergence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, _unchecked, bits, format_graph6

__all__ = [
    "CanonicalForm",
    "Embedding",
    "canonical_labeling",
    "canonical_form",
    "canonical_graph",
    "are_isomorphic",
    "find_induced_embedding",
    "contains_any",
    "is_induced_embedding",
]

CanonicalForm = str


def _refine(adj, cells, queue):
    """Refine ``cells`` (list of bitmasks) to the coarsest equitable partition.

    ``queue`` holds splitter masks; it is consumed.  Each split replaces a cell
    by its fragments ordered by neighbour count, and every fragment becomes a
    splitter.  All choices depend only on the ordered partition, so the result
    is isomorphism invariant.
    """
    while queue:
        w = queue.pop()
        out = []
        changed = False
        for x in cells:
            if x & (x - 1) == 0:
                out.append(x)
                continue
            groups = {}
            xb = x
            while xb:
                low = xb & -xb
                xb ^= low
                c = (adj[low.bit_length() - 1] & w).bit_count()
                groups[c] = groups.get(c, 0) | low
            if len(groups) == 1:
                out.append(x)
                continue
            changed = True
            for c in sorted(groups):
                frag = groups[c]
                out.append(frag)
                queue.append(frag)
        if changed:
            cells = out
            if len(cells) == len(adj):
                break
    return cells


def _individualize(cells, index, vbit):
    cell = cells[index]
    return cells[:index] + [vbit, cell ^ vbit] + cells[index + 1 :]


def _leaf_code(adj, order):
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    code = []
    for v in order:
        row = 0
        rb = adj[v]
        while rb:
            low = rb & -rb
            rb ^= low
            row |= 1 << pos[low.bit_length() - 1]
        code.append(row)
    return tuple(code)


def _orbit_roots(n, gens):
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        for a in range(n):
            ra, rb = find(a), find(g[a])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return [find(a) for a in range(n)]


class _Search:
    __slots__ = ("adj", "n", "first_path", "first_order", "first_code", "best_path", "best_order", "best_code", "gens")

    def __init__(self, adj):
        self.adj = adj
        self.n = len(adj)
        self.first_path = None
        self.first_code = None
        self.best_code = None
        self.gens = []

    def run(self, cells, path):
        adj = self.adj
        if len(cells) == self.n:
            order = [c.bit_length() - 1 for c in cells]
            code = _leaf_code(adj, order)
            if self.first_code is None:
                self.first_path = list(path)
                self.first_order = order
                self.first_code = code
                self.best_path = list(path)
                self.best_order = order
                self.best_code = code
                return None
            if code == self.first_code:
                self._automorphism(self.first_order, order)
                return _divergence(path, self.first_path)
            if code == self.best_code:
                self._automorphism(self.best_order, order)
                return _divergence(path, self.best_path)
            if code > self.best_code:
                self.best_path = list(path)
                self.best_order = order
                self.best_code = code
            return None

        # first smallest non-singleton cell
        index = -1
        size = self.n + 1
        for i, c in enumerate(cells):
            k = c.bit_count()
            if 1 < k < size:
                index, size = i, k
                if k == 2:
                    break
        depth = len(path)
        cell = cells[index]
        explored = []
        cb = cell
        while cb:
            low = cb & -cb
            cb ^= low
            v = low.bit_length() - 1
            if explored:
                fixing = [g for g in self.gens if all(g[p] == p for p in path)]
                if fixing:
                    roots = _orbit_roots(self.n, fixing)
                    rv = roots[v]
                    if any(roots[e] == rv for e in explored):
                        continue
            explored.append(v)
            child = _refine(adj, _individualize(cells, index, low), [low])
            path.append(v)
            back = self.run(child, path)
            path.pop()
            if back is not None and back < depth:
                return back
        return None

    def _automorphism(self, ref_order, order):
        g = [0] * self.n
        for a, b in zip(ref_order, order):
            g[a] = b
        self.gens.append(g)


def _divergence(path, ref):
    for i, (a, b) in enumerate(zip(path, ref)):
        if a != b:
            return i
    return len(path)


def canonical_order(adj: Sequence[int]) -> list[int]:
    """Canonical labelling of raw adjacency rows (see ``canonical_labeling``)."""
    n = len(adj)
    if n <= 1:
        return list(range(n))
    full = (1 << n) - 1
    cells = _refine(adj, [full], [full])
    if len(cells) == n:
        return [c.bit_length() - 1 for c in cells]
    search = _Search(adj)
    search.run(cells, [])
    return search.best_order


def canonical_code(adj: Sequence[int]) -> tuple[int, ...]:
    """Adjacency rows of the canonically relabelled graph."""
    return _leaf_code(adj, canonical_order(adj))


def canonical_labeling(g: Graph) -> list[int]:
    """``order`` such that ``order[i]`` is the vertex given canonical label ``i``."""
    return canonical_order(g.adj)


def _apply_order(g: Graph, order: Sequence[int]) -> Graph:
    return _unchecked(g.n, _leaf_code(g.adj, order))


def canonical_graph(g: Graph) -> Graph:
    return _apply_order(g, canonical_labeling(g))


def canonical_form(g: Graph) -> CanonicalForm:
    """graph6 of the canonically relabelled graph; equal iff isomorphic."""
    return format_graph6(canonical_graph(g))


def are_isomorphic(g: Graph, h: Graph) -> dict[int, int] | None:
    """A bijection ``g -> h`` preserving adjacency, or ``None``."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    if sorted(map(int.bit_count, g.adj)) != sorted(map(int.bit_count, h.adj)):
        return None
    og, oh = canonical_labeling(g), canonical_labeling(h)
    if _leaf_code(g.adj, og) != _leaf_code(h.adj, oh):
        return None
    return {a: b for a, b in zip(og, oh)}


# --- induced embeddings --------------------------------------------------------


@dataclass(frozen=True)
class Embedding:
    """``mapping[p]`` is the host vertex carrying pattern vertex ``p``."""

    mapping: tuple[int, ...]

    @property
    def image(self) -> int:
        s = 0
        for v in self.mapping:
            s |= 1 << v
        return s

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.mapping))


def is_induced_embedding(host: Graph, pattern: Graph, emb: Embedding) -> bool:
    m = emb.mapping
    if len(m) != pattern.n or len(set(m)) != len(m) or any(not 0 <= v < host.n for v in m):
        return False
    for a in range(pattern.n):
        for b in range(a + 1, pattern.n):
            if pattern.has_edge(a, b) != host.has_edge(m[a], m[b]):
                return False
    return True


class PatternPlan:
    """Precomputed search order for one pattern graph."""

    __slots__ = ("pattern", "n", "order", "constraints", "degrees")

    def __init__(self, pattern: Graph):
        self.pattern = pattern
        self.n = pattern.n
        deg = [pattern.degree(v) for v in range(pattern.n)]
        order = []
        placed = 0
        remaining = set(range(pattern.n))
        while remaining:
            # highest degree first, then most links into the placed prefix
            v = max(remaining, key=lambda x: ((pattern.adj[x] & placed).bit_count(), deg[x], -x)) if order else max(
                remaining, key=lambda x: (deg[x], -x)
            )
            order.append(v)
            remaining.discard(v)
            placed |= 1 << v
        self.order = order
        # constraints[d] = [(earlier depth j, adjacent?)]
        self.constraints = [[(j, pattern.has_edge(order[d], order[j])) for j in range(d)] for d in range(len(order))]
        self.degrees = [deg[v] for v in order]


_plan_cache: dict[Graph, PatternPlan] = {}


def _plan(pattern: Graph) -> PatternPlan:
    plan = _plan_cache.get(pattern)
    if plan is None:
        plan = _plan_cache[pattern] = PatternPlan(pattern)
    return plan


def _search(host_adj, host_n, plan):
    k = plan.n
    full = (1 << host_n) - 1
    nonadj = [full ^ row ^ (1 << v) for v, row in enumerate(host_adj)]
    hdeg = [row.bit_count() for row in host_adj]
    pdeg = plan.degrees
    co = [(k - 1) - d for d in pdeg]
    admissible = []
    for d in range(k):
        m = 0
        for v in range(host_n):
            if hdeg[v] >= pdeg[d] and host_n - 1 - hdeg[v] >= co[d]:
                m |= 1 << v
        if not m:
            return None
        admissible.append(m)
    chosen = [0] * k
    cons = plan.constraints
    cands = [0] * k
    used = 0
    d = 0
    cands[0] = admissible[0]
    while True:
        c = cands[d]
        if not c:
            d -= 1
            if d < 0:
                return None
            used &= ~(1 << chosen[d])
            continue
        low = c & -c
        cands[d] = c ^ low
        v = low.bit_length() - 1
        chosen[d] = v
        if d == k - 1:
            return chosen
        used |= low
        d += 1
        m = admissible[d] & ~used
        for j, edge in cons[d]:
            m &= host_adj[chosen[j]] if edge else nonadj[chosen[j]]
            if not m:
                break
        cands[d] = m


def find_induced_embedding(host: Graph, pattern: Graph) -> Embedding | None:
    if pattern.n == 0:
        raise ValueError("pattern must have at least one vertex")
    if pattern.n > host.n or pattern.edge_count > host.edge_count:
        return None
    plan = _plan(pattern)
    found = _search(host.adj, host.n, plan)
    if found is None:
        return None
    mapping = [0] * pattern.n
    for d, p in enumerate(plan.order):
        mapping[p] = found[d]
    return Embedding(tuple(mapping))


def contains_any(host: Graph, patterns: Sequence[tuple[str, Graph]]) -> tuple[str, Embedding] | None:
    """First pattern, in the given order, with an induced copy in ``host``."""
    if not patterns:
        raise ValueError("pattern list must be nonempty")
    for pid, pattern in patterns:
        emb = find_induced_embedding(host, pattern)
        if emb is not None:
            return pid, emb
    return None
