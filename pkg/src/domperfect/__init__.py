"""Domination perfect graphs: exact gamma/i solvers, a 17-graph decision procedure
with certificates, the dominating-set transformer and a small-graph census."""

from .graph import Graph, GraphError, format_graph6, parse_graph6
from .invariants import domination_number, independent_domination_number
from .iso import are_isomorphic, canonical_form, contains_any, find_induced_embedding
from .perfection import (
    Certificate,
    Imperfect,
    IndependentDominating,
    Perfect,
    is_minimal_imperfect,
    is_perfect_fast,
    is_perfect_oracle,
    transform_dominating_set,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "Graph",
    "GraphError",
    "Imperfect",
    "IndependentDominating",
    "Perfect",
    "are_isomorphic",
    "canonical_form",
    "contains_any",
    "domination_number",
    "find_induced_embedding",
    "format_graph6",
    "independent_domination_number",
    "is_minimal_imperfect",
    "is_perfect_fast",
    "is_perfect_oracle",
    "parse_graph6",
    "transform_dominating_set",
]
