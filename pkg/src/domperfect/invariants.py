"""Exact domination parameters and the structural predicates used as claim hypotheses.

Both solvers are branch and bound over bitmasks: pick the undominated vertex
with the fewest admissible dominators and branch on which one enters the set.
Witnesses are the numerically least bitmask among all optimal sets, so output
is stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .graph import Graph, GraphError, VertexSet, bits


@dataclass(frozen=True)
class ParameterResult:
    value: int
    witness: VertexSet

    @property
    def members(self) -> list[int]:
        return list(bits(self.witness))


@dataclass(frozen=True)
class Single:
    vertex: int


@dataclass(frozen=True)
class Pair:
    first: int
    second: int


SmallIDSResult = Single | Pair | None


def _require_nonempty(g: Graph) -> None:
    if g.n == 0:
        raise GraphError("parameter undefined on the order-0 graph")


def _closed_rows(g: Graph) -> list[int]:
    return [row | (1 << v) for v, row in enumerate(g.adj)]


def is_dominating(g: Graph, s: VertexSet) -> bool:
    covered = s
    for v in bits(s):
        covered |= g.adj[v]
    return covered == g.vertices


def is_independent(g: Graph, s: VertexSet) -> bool:
    return all(not (g.adj[v] & s) for v in bits(s))


def is_independent_dominating(g: Graph, s: VertexSet) -> bool:
    return is_independent(g, s) and is_dominating(g, s)


# --- domination ------------------------------------------------------------


def _dom_exists(closed, undominated, allowed, budget, maxcover):
    """Can ``budget`` vertices from ``allowed`` dominate ``undominated``?"""
    if not undominated:
        return True
    if budget == 0:
        return False
    if undominated.bit_count() > budget * maxcover:
        return False
    best = None
    best_count = 1 << 30
    u_bits = undominated
    while u_bits:
        low = u_bits & -u_bits
        u = low.bit_length() - 1
        u_bits ^= low
        opts = closed[u] & allowed
        c = opts.bit_count()
        if c < best_count:
            best, best_count = opts, c
            if c <= 1:
                break
    if best_count == 0:
        return False
    opts = best
    while opts:
        low = opts & -opts
        w = low.bit_length() - 1
        opts ^= low
        if _dom_exists(closed, undominated & ~closed[w], allowed, budget - 1, maxcover):
            return True
        # later branches may assume w is absent
        allowed &= ~low
    return False


def _dom_with(closed, full, forced, allowed, k, maxcover):
    covered = 0
    for v in bits(forced):
        covered |= closed[v]
    return _dom_exists(closed, full & ~covered, allowed & ~forced, k - forced.bit_count(), maxcover)


def domination_value(g: Graph) -> int:
    _require_nonempty(g)
    closed = _closed_rows(g)
    full = g.vertices
    maxcover = max(c.bit_count() for c in closed)
    k = 1
    while not _dom_exists(closed, full, full, k, maxcover):
        k += 1
    return k


def _least_witness(n, k, exists):
    """Numerically least k-set accepted by ``exists(forced, allowed)``.

    Elements are fixed from the top down: the largest member is the smallest
    t for which a solution inside {0..t} containing t exists, and so on.
    """
    chosen = 0
    ceiling = n
    for _ in range(k):
        for t in range(ceiling):
            forced = chosen | (1 << t)
            allowed = chosen | ((1 << (t + 1)) - 1)
            if exists(forced, allowed):
                chosen = forced
                ceiling = t
                break
        else:  # pragma: no cover - unreachable when k is the optimum
            raise AssertionError("witness reconstruction failed")
    return chosen


def domination_number(g: Graph) -> ParameterResult:
    k = domination_value(g)
    closed = _closed_rows(g)
    full = g.vertices
    maxcover = max(c.bit_count() for c in closed)
    witness = _least_witness(
        g.n, k, lambda forced, allowed: _dom_with(closed, full, forced, allowed, k, maxcover)
    )
    return ParameterResult(k, witness)


# --- independent domination --------------------------------------------------


def _ids_exists(closed, undominated, allowed, budget, maxcover):
    """Can ``budget`` pairwise non-adjacent vertices finish an independent dominating set?

    ``undominated`` doubles as the set of vertices that may still join the
    independent set (a vertex outside it is adjacent to, or is, a chosen one).
    """
    if not undominated:
        return True
    if budget == 0:
        return False
    if undominated.bit_count() > budget * maxcover:
        return False
    best = None
    best_count = 1 << 30
    u_bits = undominated
    while u_bits:
        low = u_bits & -u_bits
        u = low.bit_length() - 1
        u_bits ^= low
        opts = closed[u] & undominated & allowed
        c = opts.bit_count()
        if c < best_count:
            best, best_count = opts, c
            if c <= 1:
                break
    if best_count == 0:
        return False
    opts = best
    while opts:
        low = opts & -opts
        w = low.bit_length() - 1
        opts ^= low
        if _ids_exists(closed, undominated & ~closed[w], allowed, budget - 1, maxcover):
            return True
        allowed &= ~low
    return False


def _ids_with(g, closed, full, forced, allowed, k, maxcover):
    if not is_independent(g, forced):
        return False
    covered = 0
    for v in bits(forced):
        covered |= closed[v]
    return _ids_exists(closed, full & ~covered, allowed & ~forced, k - forced.bit_count(), maxcover)


def independent_domination_value(g: Graph) -> int:
    _require_nonempty(g)
    closed = _closed_rows(g)
    full = g.vertices
    maxcover = max(c.bit_count() for c in closed)
    k = 1
    while not _ids_exists(closed, full, full, k, maxcover):
        k += 1
    return k


def independent_domination_number(g: Graph) -> ParameterResult:
    k = independent_domination_value(g)
    closed = _closed_rows(g)
    full = g.vertices
    maxcover = max(c.bit_count() for c in closed)
    witness = _least_witness(
        g.n, k, lambda forced, allowed: _ids_with(g, closed, full, forced, allowed, k, maxcover)
    )
    return ParameterResult(k, witness)


def small_independent_dominating(g: Graph) -> SmallIDSResult:
    """A dominating vertex, else a non-adjacent dominating pair, else ``None`` (i > 2)."""
    closed = _closed_rows(g)
    full = g.vertices
    for v in range(g.n):
        if closed[v] == full:
            return Single(v)
    for v in range(g.n):
        for w in range(v + 1, g.n):
            if not g.adj[v] >> w & 1 and closed[v] | closed[w] == full:
                return Pair(v, w)
    return None


# --- structural predicates ----------------------------------------------------


def perfect_elimination_candidate(g: Graph) -> list[int]:
    """Reverse of a maximum cardinality search order."""
    weight = [0] * g.n
    unnumbered = g.vertices
    order = []
    while unnumbered:
        v = max(bits(unnumbered), key=lambda x: (weight[x], -x))
        order.append(v)
        unnumbered &= ~(1 << v)
        for w in bits(g.adj[v] & unnumbered):
            weight[w] += 1
    order.reverse()
    return order


def is_perfect_elimination_ordering(g: Graph, order: list[int]) -> bool:
    position = [0] * g.n
    for i, v in enumerate(order):
        position[v] = i
    for v in order:
        later = [w for w in bits(g.adj[v]) if position[w] > position[v]]
        if not later:
            continue
        parent = min(later, key=lambda w: position[w])
        rest = 0
        for w in later:
            if w != parent:
                rest |= 1 << w
        if rest & ~g.adj[parent]:
            return False
    return True


def is_chordal(g: Graph) -> bool:
    return is_perfect_elimination_ordering(g, perfect_elimination_candidate(g))


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def is_planar(g: Graph) -> bool:
    if g.n >= 3 and g.edge_count > 3 * g.n - 6:
        return False
    planar, _ = nx.check_planarity(to_networkx(g))
    return planar


def _has_independent_subset(g: Graph, candidates: VertexSet, k: int) -> bool:
    if k <= 0:
        return True
    if candidates.bit_count() < k:
        return False
    low = candidates & -candidates
    v = low.bit_length() - 1
    rest = candidates ^ low
    return _has_independent_subset(g, rest & ~g.adj[v], k - 1) or _has_independent_subset(g, rest, k)


def _check_star_size(k: int) -> None:
    if k < 3:
        raise ValueError(f"star size must be at least 3, got {k}")


def is_star_free(g: Graph, k: int) -> bool:
    """True iff ``g`` has no induced K_{1,k}."""
    _check_star_size(k)
    return not any(_has_independent_subset(g, g.adj[v], k) for v in range(g.n))


def has_sharing_stars(g: Graph, k: int) -> bool:
    """Two induced K_{1,k} with different centres and exactly one common edge.

    The common edge has to join the two centres x and y, and then each star
    needs k-1 further independent leaves outside the other centre's closed
    neighbourhood; any such choice shares no second edge.
    """
    _check_star_size(k)
    for x, y in g.edges():
        only_x = g.adj[x] & ~g.adj[y] & ~(1 << y)
        only_y = g.adj[y] & ~g.adj[x] & ~(1 << x)
        if _has_independent_subset(g, only_x, k - 1) and _has_independent_subset(g, only_y, k - 1):
            return True
    return False


def bc_bound(gamma: int, k: int) -> int:
    return gamma * (k - 2) - (k - 3)


def bc_inequality_holds(g: Graph, k: int) -> bool:
    """i(g) <= gamma(g)(k-2) - (k-3)."""
    _check_star_size(k)
    return independent_domination_value(g) <= bc_bound(domination_value(g), k)


def edge_in_no_triangle(g: Graph) -> tuple[int, int] | None:
    for u, v in g.edges():
        if not g.adj[u] & g.adj[v]:
            return (u, v)
    return None


def induced_stars(g: Graph, k: int):
    """Every induced K_{1,k} as (centre, leaf set); brute force, for cross-checks."""
    for c in range(g.n):
        for leaves in combinations(bits(g.adj[c]), k):
            mask = sum(1 << v for v in leaves)
            if all(not g.adj[v] & mask for v in leaves):
                yield c, mask
