"""Lazily computed properties of one enumerated graph, shared by all claims."""

from __future__ import annotations

from functools import cached_property

from .. import catalog
from ..graph import Graph, complement, diameter, format_graph6, is_triangle_free
from ..invariants import (
    domination_value,
    has_sharing_stars,
    independent_domination_value,
    is_chordal,
    is_planar,
    is_star_free,
)
from ..iso import contains_any, find_induced_embedding
from ..perfection import hereditary_full_check, oracle_status

NO_HIT = len(catalog.FORBIDDEN_IDS) + 1


class GraphFacts:
    def __init__(self, graph: Graph):
        self.graph = graph

    @cached_property
    def graph6(self) -> str:
        return format_graph6(self.graph)

    @cached_property
    def first_hit(self) -> int:
        """Index j of the first G_j found induced (they are searched by order), or NO_HIT."""
        hit = contains_any(self.graph, catalog.forbidden_patterns())
        return NO_HIT if hit is None else int(hit[0][1:])

    @property
    def fast_perfect(self) -> bool:
        return self.first_hit == NO_HIT

    def free_of_prefix(self, j: int) -> bool:
        """No G_1..G_j occurs induced."""
        return self.first_hit > j

    @cached_property
    def _oracle(self) -> tuple[bool, bool]:
        return oracle_status(self.graph)

    @property
    def perfect(self) -> bool:
        return self._oracle[0]

    @property
    def minimal_imperfect(self) -> bool:
        return self._oracle[1]

    @cached_property
    def full_check(self) -> bool:
        return hereditary_full_check(self.graph)

    @cached_property
    def gamma(self) -> int:
        return domination_value(self.graph)

    @cached_property
    def i(self) -> int:
        return independent_domination_value(self.graph)

    @cached_property
    def triangle_free(self) -> bool:
        return is_triangle_free(self.graph)

    @cached_property
    def chordal(self) -> bool:
        return is_chordal(self.graph)

    @cached_property
    def planar(self) -> bool:
        return is_planar(self.graph)

    @cached_property
    def diameter(self) -> int | None:
        return diameter(self.graph)

    @cached_property
    def complement_fast_perfect(self) -> bool:
        return contains_any(complement(self.graph), catalog.forbidden_patterns()) is None

    def star_free(self, k: int) -> bool:
        return is_star_free(self.graph, k)

    def sharing_stars(self, k: int) -> bool:
        return has_sharing_stars(self.graph, k)

    def contains(self, pid: str) -> bool:
        return find_induced_embedding(self.graph, catalog.graph(pid)) is not None
