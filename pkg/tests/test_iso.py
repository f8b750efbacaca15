from itertools import combinations, permutations, product

import pytest

from domperfect import catalog
from domperfect.graph import (
    add_vertex,
    complete_graph,
    cycle_graph,
    empty_graph,
    from_edge_list,
    induced_subgraph,
    path_graph,
    vset,
)
from domperfect.iso import (
    Embedding,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    contains_any,
    find_induced_embedding,
    is_induced_embedding,
)

from conftest import permuted, random_graph


def all_labelled(n):
    pairs = list(combinations(range(n), 2))
    for chosen in product((0, 1), repeat=len(pairs)):
        yield from_edge_list(n, [e for e, c in zip(pairs, chosen) if c])


def test_p3_labelings_share_one_form():
    p3 = path_graph(3)
    forms = {canonical_form(permuted(p3, perm)) for perm in permutations(range(3))}
    assert len(forms) == 1
    assert canonical_form(complete_graph(3)) != canonical_form(p3)


@pytest.mark.parametrize("n, classes", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_distinct_forms_over_labelled_graphs(n, classes):
    assert len({canonical_form(g) for g in all_labelled(n)}) == classes


def test_form_invariant_under_random_permutations(rng):
    for _ in range(300):
        n = rng.randint(1, 14)
        g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(permuted(g, perm)) == canonical_form(g)


def test_regular_graphs_are_fast():
    # highly symmetric inputs exercise the automorphism pruning
    for n in (12, 16, 20):
        assert canonical_form(cycle_graph(n)) == canonical_form(permuted(cycle_graph(n), list(reversed(range(n)))))
        canonical_form(complete_graph(n))
    petersen = from_edge_list(10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)]
                              + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])
    assert canonical_graph(petersen).edge_count == 15


def test_are_isomorphic_mappings():
    for a, b in (("U1", "H5"), ("U2", "H6")):
        g, h = catalog.graph(a), catalog.graph(b)
        iso = are_isomorphic(g, h)
        assert iso is not None
        assert sorted(iso.values()) == list(range(g.n))
        for u, v in combinations(range(g.n), 2):
            assert g.has_edge(u, v) == h.has_edge(iso[u], iso[v])
    assert are_isomorphic(complete_graph(3), path_graph(3)) is None
    assert are_isomorphic(complete_graph(3), complete_graph(4)) is None


def ref_contains(host, pattern):
    target = canonical_form(pattern)
    return any(canonical_form(induced_subgraph(host, vset(c))) == target for c in combinations(range(host.n), pattern.n))


def test_embedding_examples():
    assert find_induced_embedding(catalog.graph("H8"), catalog.graph("H1")) is not None
    assert find_induced_embedding(catalog.graph("G7"), catalog.graph("H5")) is not None
    assert find_induced_embedding(cycle_graph(5), complete_graph(3)) is None
    with pytest.raises(ValueError):
        find_induced_embedding(cycle_graph(5), empty_graph(0))


def test_embedding_matches_subset_enumeration(rng):
    patterns = [path_graph(3), complete_graph(3), cycle_graph(4), path_graph(4), catalog.graph("G1"),
                from_edge_list(4, [(0, 1), (0, 2), (0, 3)]), empty_graph(3)]
    for _ in range(150):
        host = random_graph(rng, rng.randint(1, 8), rng.choice([0.3, 0.5, 0.7]))
        for p in patterns:
            emb = find_induced_embedding(host, p)
            assert (emb is not None) == ref_contains(host, p)
            if emb is not None:
                assert is_induced_embedding(host, p, emb)


def test_is_induced_embedding_rejects_bad_maps():
    host = path_graph(3)
    assert not is_induced_embedding(host, path_graph(2), Embedding((0, 2)))
    assert not is_induced_embedding(host, path_graph(2), Embedding((0, 0)))
    assert not is_induced_embedding(host, path_graph(2), Embedding((0, 5)))
    assert is_induced_embedding(host, path_graph(2), Embedding((1, 2)))


def test_contains_any():
    pats = catalog.forbidden_patterns()
    g1 = catalog.graph("G1")
    pid, emb = contains_any(g1, pats)
    assert pid == "G1" and is_induced_embedding(g1, g1, emb)
    assert contains_any(catalog.graph("H5"), pats) is None
    padded = add_vertex(g1, 0)
    pid, emb = contains_any(padded, pats)
    assert pid == "G1" and 6 not in emb.mapping
    with pytest.raises(ValueError):
        contains_any(g1, [])


def test_contains_any_respects_order():
    host = complete_graph(4)
    k2, k3 = complete_graph(2), complete_graph(3)
    assert contains_any(host, [("a", k3), ("b", k2)])[0] == "a"
    assert contains_any(host, [("b", k2), ("a", k3)])[0] == "b"
    assert contains_any(host, [("c", cycle_graph(4)), ("b", k2)])[0] == "b"
