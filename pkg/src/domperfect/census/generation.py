"""Orderly generation of graphs up to isomorphism by canonical deletion.

A child C of a canonical parent P (one new vertex x joined to a subset of
V(P)) is kept iff P is the canonical parent of C.  The canonical parent is
C - w where w is, among the vertices of C with the largest (degree, sum of
neighbour degrees), the one with the highest canonical label.  Children of
one parent that coincide up to isomorphism are merged through a per-parent
set.  The degree invariant rejects most children before any canonisation.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from ..graph import Graph, _unchecked, format_graph6
from ..iso import _leaf_code, canonical_code, canonical_order

MAX_ENUMERATION_ORDER = 10

# OEIS A000088
KNOWN_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168)


def _children(parent: tuple[int, ...]) -> list[tuple[int, ...]]:
    m = len(parent)
    newbit = 1 << m
    deg = [r.bit_count() for r in parent]
    maxdeg = max(deg) if m else 0
    seen = set()
    out = []
    for s in range(1 << m):
        k = s.bit_count()
        if k < maxdeg:
            continue
        top = 0
        for u in range(m):
            d = deg[u] + (s >> u & 1)
            if d > top:
                top = d
        if k < top:
            continue
        child = [r | newbit if s >> u & 1 else r for u, r in enumerate(parent)]
        child.append(s)
        if k > top:
            code = canonical_code(child)
            if code not in seen:
                seen.add(code)
                out.append(code)
            continue
        # tie on degree: compare neighbour-degree sums
        cdeg = deg[:] + [k]
        for u in range(m):
            if s >> u & 1:
                cdeg[u] += 1
        tied = [u for u in range(m + 1) if cdeg[u] == k]
        score = {}
        for u in tied:
            t = 0
            row = child[u]
            while row:
                low = row & -row
                row ^= low
                t += cdeg[low.bit_length() - 1]
            score[u] = t
        best = max(score.values())
        if score[m] < best:
            continue
        cls = [u for u in tied if score[u] == best]
        order = canonical_order(child)
        code = _leaf_code(child, order)
        if code in seen:
            continue
        if len(cls) > 1:
            pos = {v: i for i, v in enumerate(order)}
            w = max(cls, key=pos.__getitem__)
            if w != m:
                keep = [v for v in range(m + 1) if v != w]
                index = {v: i for i, v in enumerate(keep)}
                reduced = []
                for v in keep:
                    row = 0
                    rb = child[v] & ~(1 << w)
                    while rb:
                        low = rb & -rb
                        rb ^= low
                        row |= 1 << index[low.bit_length() - 1]
                    reduced.append(row)
                if canonical_code(reduced) != parent:
                    continue
        seen.add(code)
        out.append(code)
    return out


def _sort_key(code: tuple[int, ...]) -> str:
    return format_graph6(_unchecked(len(code), code))


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((0,),)
    graphs = []
    for parent in _level(n - 1):
        graphs.extend(_children(parent))
    graphs.sort(key=_sort_key)
    return tuple(graphs)


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ValueError(f"enumeration order must be in 1..{MAX_ENUMERATION_ORDER}, got {n}")


def enumerate_codes(n: int) -> Iterator[tuple[int, ...]]:
    """Canonical adjacency rows, one per isomorphism class."""
    _check_order(n)
    if n < MAX_ENUMERATION_ORDER:
        yield from _level(n)
        return
    # order 10 streams parent by parent instead of holding twelve million graphs
    for parent in _level(n - 1):
        children = _children(parent)
        children.sort(key=_sort_key)
        yield from children


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of order ``n``.

    Orders up to 9 come out in increasing canonical graph6 order; order 10 is
    grouped by parent.
    """
    for code in enumerate_codes(n):
        yield _unchecked(n, code)


def clear_cache() -> None:
    _level.cache_clear()
