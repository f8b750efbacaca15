import random

import pytest

from domperfect import catalog
from domperfect.census import enumerate_graphs
from domperfect.graph import (
    GraphError,
    add_vertex,
    bits,
    complete_graph,
    cycle_graph,
    empty_graph,
    induced_subgraph,
    star_graph,
    vset,
)
from domperfect.invariants import domination_number, domination_value, independent_domination_value, is_dominating
from domperfect.iso import are_isomorphic, is_induced_embedding
from domperfect.perfection import (
    ORACLE_MAX_ORDER,
    Certificate,
    Imperfect,
    IndependentDominating,
    OracleBudgetError,
    Perfect,
    abc_partition,
    check_outcome,
    hereditary_full_check,
    is_minimal_imperfect,
    is_perfect_fast,
    is_perfect_oracle,
    oracle_status,
    potential,
    transform_dominating_set,
)

from conftest import random_graph, ref_perfect


def test_fast_check_examples():
    assert is_perfect_fast(catalog.graph("H5")) == Perfect()
    assert is_perfect_fast(empty_graph(1)).perfect
    g1 = catalog.graph("G1")
    v = is_perfect_fast(g1)
    assert isinstance(v, Imperfect) and v.pattern == "G1"
    assert v.embedding.mapping == tuple(range(6))
    assert v.witness == g1.vertices


def test_oracle_examples():
    assert is_perfect_oracle(catalog.graph("H6")).perfect
    v = is_perfect_oracle(catalog.graph("G3"))
    assert isinstance(v, Imperfect) and v.witness == 0b111111 and (v.gamma, v.i) == (2, 3)
    for n in range(1, 9):
        assert is_perfect_oracle(complete_graph(n)).perfect
    assert is_perfect_oracle(empty_graph(0)).perfect


def test_oracle_budget():
    with pytest.raises(OracleBudgetError):
        is_perfect_oracle(empty_graph(ORACLE_MAX_ORDER + 1))
    with pytest.raises(OracleBudgetError):
        hereditary_full_check(empty_graph(ORACLE_MAX_ORDER + 1))


def test_oracle_matches_definition_exhaustively():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            assert is_perfect_oracle(g).perfect == ref_perfect(g), g
            assert hereditary_full_check(g) == is_perfect_oracle(g).perfect


def test_oracle_witness_is_a_smallest_violation(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(6, 10), 0.5)
        v = is_perfect_oracle(g)
        if v.perfect:
            continue
        h = induced_subgraph(g, v.witness)
        assert domination_value(h) == v.gamma == 2 < v.i == independent_domination_value(h)
        # nothing smaller violates
        for u in bits(v.witness):
            assert is_perfect_oracle(induced_subgraph(g, v.witness & ~(1 << u))).perfect


def test_fast_and_oracle_agree_on_random_graphs():
    rng = random.Random(7)
    mismatches = []
    for _ in range(10_000):
        n = rng.randint(1, 12)
        g = random_graph(rng, n, rng.choice([0.1, 0.2, 0.35, 0.5, 0.65, 0.8, 0.9]))
        fast = is_perfect_fast(g)
        if fast.perfect != is_perfect_oracle(g).perfect:
            mismatches.append(g)
        if not fast.perfect:
            pattern = catalog.graph(fast.pattern)
            assert is_induced_embedding(g, pattern, fast.embedding)
            assert are_isomorphic(induced_subgraph(g, fast.witness), pattern) is not None
    assert mismatches == []


def test_heredity_spot_check(rng):
    seen = 0
    while seen < 100:
        g = random_graph(rng, rng.randint(5, 11), rng.choice([0.15, 0.85]))
        if not is_perfect_fast(g).perfect:
            continue
        seen += 1
        s = rng.getrandbits(g.n) or 1
        assert is_perfect_fast(induced_subgraph(g, s)).perfect


def test_minimal_imperfect():
    g1 = catalog.graph("G1")
    assert is_minimal_imperfect(g1)
    assert not is_minimal_imperfect(add_vertex(g1, 0))
    assert not is_minimal_imperfect(cycle_graph(6))
    assert not is_minimal_imperfect(empty_graph(0))
    assert oracle_status(g1) == (False, True)
    assert oracle_status(add_vertex(g1, 0)) == (False, False)
    assert oracle_status(cycle_graph(6)) == (True, False)


# --- transformer ------------------------------------------------------------------


def test_transform_star():
    k13 = star_graph(3)
    out = transform_dominating_set(k13, vset([0, 1]))
    assert out == IndependentDominating(0b1, out.steps)
    assert len(out.steps) == 1


def test_transform_independent_input_unchanged():
    c6 = cycle_graph(6)
    out = transform_dominating_set(c6, vset([0, 3]))
    assert out == IndependentDominating(vset([0, 3]))


def test_transform_rejects_non_dominating():
    with pytest.raises(GraphError):
        transform_dominating_set(cycle_graph(6), vset([0]))
    with pytest.raises(GraphError):
        transform_dominating_set(cycle_graph(6), 1 << 9)


def test_abc_partition():
    k13 = star_graph(3)
    part = abc_partition(k13, vset([0, 1]), 0, 1)
    assert (part.a, part.b, part.c) == (vset([2, 3]), 0, 0)
    assert part.support == k13.vertices


@pytest.mark.parametrize("pid", [f"G{j}" for j in range(1, 18)])
def test_certificate_on_forbidden_graphs(pid):
    g = catalog.graph(pid)
    d = domination_number(g).witness
    out = transform_dominating_set(g, d)
    assert isinstance(out, Certificate)
    assert out.pattern in catalog.FORBIDDEN_IDS
    h = induced_subgraph(g, out.subgraph)
    assert domination_value(h) == 2 < independent_domination_value(h)
    assert is_induced_embedding(g, catalog.graph(out.pattern), out.embedding)
    assert out.embedding.image & ~out.subgraph == 0


def test_transform_exhaustive_small_perfect_graphs():
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            if not is_perfect_fast(g).perfect:
                continue
            for d in range(1, 1 << n):
                if not is_dominating(g, d):
                    continue
                out = transform_dominating_set(g, d)
                assert isinstance(out, IndependentDominating)
                assert check_outcome(g, d, out)
                size, edges = potential(g, d)
                assert len(out.steps) <= size + edges
