import pytest

from domperfect.census import KNOWN_COUNTS, enumerate_graphs
from domperfect.census.generation import _children, enumerate_codes
from domperfect.graph import format_graph6, is_triangle_free
from domperfect.invariants import is_chordal, is_planar
from domperfect.iso import canonical_code, canonical_form

# OEIS A005470 (planar), A048192 (chordal), A006785 (triangle-free), orders 1..8
PLANAR = (1, 2, 4, 11, 33, 142, 822, 6966)
CHORDAL = (1, 2, 4, 10, 27, 94, 393, 2119)
TRIANGLE_FREE = (1, 2, 3, 7, 14, 38, 107, 410)


@pytest.fixture(scope="module")
def by_order():
    return {n: list(enumerate_graphs(n)) for n in range(1, 9)}


def test_counts_match_known_sequence(by_order):
    assert [len(by_order[n]) for n in range(1, 9)] == list(KNOWN_COUNTS[1:9])


def test_output_is_canonical_and_strictly_increasing(by_order):
    for n, gs in by_order.items():
        words = [format_graph6(g) for g in gs]
        assert words == sorted(words) and len(set(words)) == len(words)
        if n <= 7:
            assert all(canonical_form(g) == w for g, w in zip(gs, words))


@pytest.mark.parametrize(
    "pred, expected", [(is_planar, PLANAR), (is_chordal, CHORDAL), (is_triangle_free, TRIANGLE_FREE)]
)
def test_class_counts(by_order, pred, expected):
    assert tuple(sum(map(pred, by_order[n])) for n in range(1, 9)) == expected


def test_order_bounds():
    with pytest.raises(ValueError):
        list(enumerate_graphs(0))
    with pytest.raises(ValueError):
        list(enumerate_graphs(11))


def test_children_are_canonical_and_distinct(by_order):
    parent = canonical_code(by_order[5][20].adj)
    kids = _children(parent)
    assert len(set(kids)) == len(kids)
    assert all(canonical_code(k) == k for k in kids)


def test_codes_and_graphs_agree():
    assert [g.adj for g in enumerate_graphs(5)] == list(enumerate_codes(5))
