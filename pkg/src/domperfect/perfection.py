"""Domination perfection: forbidden-pattern check, brute-force oracle, transformer.

The oracle looks at every induced subgraph at once with numpy: an induced
subgraph <S> violates perfection exactly when some pair dominates S, no
single vertex does, and no non-adjacent pair does (then gamma(<S>) = 2 < i(<S>)).
Restricting to gamma = 2 is sound because a graph is domination perfect iff
every induced subgraph with gamma = 2 has i = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numba import njit

from .graph import Graph, GraphError, VertexSet, bits, induced_subgraph
from .invariants import (
    Pair,
    Single,
    domination_value,
    independent_domination_value,
    is_dominating,
    is_independent,
    small_independent_dominating,
)
from .iso import Embedding, contains_any

ORACLE_MAX_ORDER = 14


class OracleBudgetError(ValueError):
    """The exponential oracle refuses graphs above ``ORACLE_MAX_ORDER`` vertices."""


@dataclass(frozen=True)
class Perfect:
    @property
    def perfect(self) -> bool:
        return True


@dataclass(frozen=True)
class Imperfect:
    """``pattern`` names a catalog graph (fast check) or is ``"oracle"``."""

    pattern: str
    witness: VertexSet
    gamma: int
    i: int
    embedding: Embedding | None = None

    @property
    def perfect(self) -> bool:
        return False


PerfectionVerdict = Perfect | Imperfect


def forbidden_patterns():
    from .catalog import forbidden_patterns as fp

    return fp()


def is_perfect_fast(g: Graph, patterns=None) -> PerfectionVerdict:
    """Perfect iff no G1..G17 occurs as an induced subgraph."""
    hit = contains_any(g, patterns or forbidden_patterns())
    if hit is None:
        return Perfect()
    pid, emb = hit
    return Imperfect(pid, emb.image, 2, 3, emb)


@lru_cache(maxsize=None)
def _subset_tables(n: int):
    s = np.arange(1 << n, dtype=np.int64)
    size = np.zeros(1 << n, dtype=np.int8)
    for v in range(n):
        size += ((s >> v) & 1).astype(np.int8)
    member = [((s >> v) & 1).astype(bool) for v in range(n)]
    return s, size, member


def violating_subsets(g: Graph) -> np.ndarray:
    """Boolean array over all vertex subsets S: gamma(<S>) = 2 < i(<S>)."""
    n = g.n
    s, _, member = _subset_tables(n)
    closed = [row | (1 << v) for v, row in enumerate(g.adj)]
    one = np.zeros(s.shape, dtype=bool)
    for v in range(n):
        one |= member[v] & ((s & ~closed[v]) == 0)
    two = np.zeros(s.shape, dtype=bool)
    two_ind = np.zeros(s.shape, dtype=bool)
    for u in range(n):
        for v in range(u + 1, n):
            ok = member[u] & member[v] & ((s & ~(closed[u] | closed[v])) == 0)
            two |= ok
            if not g.adj[u] >> v & 1:
                two_ind |= ok
    return two & ~one & ~two_ind


def is_perfect_oracle(g: Graph) -> PerfectionVerdict:
    """Brute force over all induced subgraphs with gamma = 2; smallest violation wins."""
    if g.n > ORACLE_MAX_ORDER:
        raise OracleBudgetError(f"oracle limited to {ORACLE_MAX_ORDER} vertices, got {g.n}")
    if g.n == 0:
        return Perfect()
    bad = violating_subsets(g)
    if not bad.any():
        return Perfect()
    _, size, _ = _subset_tables(g.n)
    idx = np.flatnonzero(bad)
    smallest = idx[size[idx] == size[idx].min()]
    witness = int(smallest.min())
    h = induced_subgraph(g, witness)
    return Imperfect("oracle", witness, domination_value(h), independent_domination_value(h))


@njit(cache=True)
def _gamma_i_tables(adj, n):
    full = 1 << n
    size = np.zeros(full, dtype=np.int8)
    cover = np.zeros(full, dtype=np.int64)
    indep = np.ones(full, dtype=np.bool_)
    for d in range(1, full):
        low = d & -d
        v = 0
        while (low >> v) != 1:
            v += 1
        rest = d ^ low
        size[d] = size[rest] + 1
        cover[d] = cover[rest] | adj[v] | low
        indep[d] = indep[rest] and (adj[v] & rest) == 0
    gamma = np.full(full, 127, dtype=np.int8)
    ind = np.full(full, 127, dtype=np.int8)
    gamma[0] = 0
    ind[0] = 0
    for s in range(1, full):
        d = s
        while d:
            if (s & ~cover[d]) == 0:
                k = size[d]
                if k < gamma[s]:
                    gamma[s] = k
                if indep[d] and k < ind[s]:
                    ind[s] = k
            d = (d - 1) & s
    return gamma, ind


def hereditary_full_check(g: Graph) -> bool:
    """gamma(<S>) = i(<S>) for every nonempty S, without the gamma = 2 shortcut."""
    if g.n > ORACLE_MAX_ORDER:
        raise OracleBudgetError(f"oracle limited to {ORACLE_MAX_ORDER} vertices, got {g.n}")
    if g.n == 0:
        return True
    gamma, ind = _gamma_i_tables(np.array(g.adj, dtype=np.int64), g.n)
    return bool((gamma == ind).all())


def is_minimal_imperfect(g: Graph) -> bool:
    """Imperfect, while every one-vertex-deleted subgraph is perfect."""
    if g.n == 0:
        return False
    if g.n > ORACLE_MAX_ORDER:
        raise OracleBudgetError(f"oracle limited to {ORACLE_MAX_ORDER} vertices, got {g.n}")
    if domination_value(g) >= independent_domination_value(g):
        return False
    bad = violating_subsets(g)
    bad[g.vertices] = False
    # a violation on a proper subset S lives inside g - v for any v outside S
    return not bad.any()


# --- constructive transformation ------------------------------------------------


@dataclass(frozen=True)
class ABCPartition:
    u: int
    v: int
    a: VertexSet
    b: VertexSet
    c: VertexSet

    @property
    def support(self) -> VertexSet:
        return self.a | self.b | self.c | (1 << self.u) | (1 << self.v)


def abc_partition(g: Graph, d: VertexSet, u: int, v: int) -> ABCPartition:
    """Outside vertices whose neighbours in ``d`` are exactly {u}, {v}, or {u, v}."""
    a = b = c = 0
    bu, bv = 1 << u, 1 << v
    for x in bits(g.vertices & ~d):
        seen = g.adj[x] & d
        if seen == bu:
            a |= 1 << x
        elif seen == bv:
            b |= 1 << x
        elif seen == bu | bv:
            c |= 1 << x
    return ABCPartition(u, v, a, b, c)


def potential(g: Graph, d: VertexSet) -> tuple[int, int]:
    edges = sum((g.adj[x] & d).bit_count() for x in bits(d)) // 2
    return (d.bit_count(), edges)


@dataclass(frozen=True)
class Step:
    u: int
    v: int
    replacement: tuple[int, ...]
    before: VertexSet
    after: VertexSet


@dataclass(frozen=True)
class IndependentDominating:
    dominating_set: VertexSet
    steps: tuple[Step, ...] = ()


@dataclass(frozen=True)
class Certificate:
    """``subgraph`` induces gamma = 2 < i; ``embedding`` maps the pattern into the host."""

    subgraph: VertexSet
    pattern: str | None
    embedding: Embedding | None
    steps: tuple[Step, ...] = ()


TransformOutcome = IndependentDominating | Certificate


def _first_edge(g: Graph, d: VertexSet):
    for u in bits(d):
        later = g.adj[u] & d & ~((1 << (u + 1)) - 1)
        if later:
            return u, (later & -later).bit_length() - 1
    return None


def transform_dominating_set(g: Graph, d: VertexSet, patterns=None) -> TransformOutcome:
    """Turn a dominating set into an independent dominating set no larger than it.

    Each round takes the least edge uv inside D, looks at H = <A u B u C u {u,v}>
    and replaces u, v by a dominating vertex or independent dominating pair of H.
    Vertices of H see no other member of D, so D stays dominating and the pair
    (|D|, edges in <D>) drops lexicographically.  If H has i > 2 the round
    stops with a forbidden-pattern certificate instead.
    """
    if d & ~g.vertices:
        raise GraphError("vertex set contains vertices outside the graph")
    if not is_dominating(g, d):
        raise GraphError("input set is not dominating")
    steps: list[Step] = []
    while True:
        edge = _first_edge(g, d)
        if edge is None:
            return IndependentDominating(d, tuple(steps))
        u, v = edge
        part = abc_partition(g, d, u, v)
        support = part.support
        local = list(bits(support))
        h = induced_subgraph(g, support)
        found = small_independent_dominating(h)
        if isinstance(found, Single):
            repl = (local[found.vertex],)
        elif isinstance(found, Pair):
            repl = (local[found.first], local[found.second])
        else:
            hit = contains_any(h, patterns or forbidden_patterns())
            if hit is None:
                return Certificate(support, None, None, tuple(steps))
            pid, emb = hit
            lifted = Embedding(tuple(local[x] for x in emb.mapping))
            return Certificate(support, pid, lifted, tuple(steps))
        new = d & ~((1 << u) | (1 << v))
        for x in repl:
            new |= 1 << x
        steps.append(Step(u, v, repl, d, new))
        d = new


def check_outcome(g: Graph, d: VertexSet, outcome: TransformOutcome) -> bool:
    """Re-verify a transformer result against its contract."""
    if isinstance(outcome, IndependentDominating):
        s = outcome.dominating_set
        if not (is_independent(g, s) and is_dominating(g, s) and s.bit_count() <= d.bit_count()):
            return False
    prev = potential(g, d)
    for step in outcome.steps:
        cur = potential(g, step.after)
        if not cur < prev or not is_dominating(g, step.after):
            return False
        prev = cur
    return True


def oracle_status(g: Graph) -> tuple[bool, bool]:
    """(perfect, minimal imperfect) from a single pass over all subsets."""
    if g.n > ORACLE_MAX_ORDER:
        raise OracleBudgetError(f"oracle limited to {ORACLE_MAX_ORDER} vertices, got {g.n}")
    if g.n == 0:
        return True, False
    bad = violating_subsets(g)
    hits = int(bad.sum())
    if hits == 0:
        return True, False
    return False, hits == 1 and bool(bad[g.vertices])
