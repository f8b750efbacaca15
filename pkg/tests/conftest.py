"""Shared fixtures and small independent reference implementations.

The reference functions here deliberately avoid the package's solvers: they
enumerate subsets with itertools and talk to graphs only through ``has_edge``.
"""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from domperfect.graph import Graph, from_edge_list


def ref_dominates(g: Graph, s) -> bool:
    s = set(s)
    return all(v in s or any(g.has_edge(v, u) for u in s) for v in range(g.n))


def ref_independent(g: Graph, s) -> bool:
    return all(not g.has_edge(a, b) for a, b in combinations(s, 2))


def ref_gamma(g: Graph) -> int:
    for k in range(1, g.n + 1):
        if any(ref_dominates(g, c) for c in combinations(range(g.n), k)):
            return k
    raise AssertionError("unreachable")


def ref_i(g: Graph) -> int:
    for k in range(1, g.n + 1):
        if any(ref_independent(g, c) and ref_dominates(g, c) for c in combinations(range(g.n), k)):
            return k
    raise AssertionError("unreachable")


def ref_induced(g: Graph, vs) -> Graph:
    vs = sorted(vs)
    return from_edge_list(len(vs), [(a, b) for a, b in combinations(range(len(vs)), 2) if g.has_edge(vs[a], vs[b])])


def ref_perfect(g: Graph) -> bool:
    """gamma = i on every nonempty induced subgraph, by plain enumeration."""
    for k in range(1, g.n + 1):
        for vs in combinations(range(g.n), k):
            h = ref_induced(g, vs)
            if ref_gamma(h) != ref_i(h):
                return False
    return True


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edge_list(n, [(a, b) for a, b in combinations(range(n), 2) if rng.random() < p])


def permuted(g: Graph, perm) -> Graph:
    return from_edge_list(g.n, [(perm[a], perm[b]) for a, b in g.edges()])


@pytest.fixture
def rng():
    return random.Random(20261014)
