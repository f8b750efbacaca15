"""Exhaustive small-graph census and claim verification."""

from .claims import CLAIMS, ClaimVerdict, UnknownClaim, verify_claim, verify_claims
from .generation import KNOWN_COUNTS, MAX_ENUMERATION_ORDER, enumerate_graphs
from .report import CensusReport, family_A, minimal_imperfect_census, run_census

__all__ = [
    "CLAIMS",
    "CensusReport",
    "ClaimVerdict",
    "KNOWN_COUNTS",
    "MAX_ENUMERATION_ORDER",
    "UnknownClaim",
    "enumerate_graphs",
    "family_A",
    "minimal_imperfect_census",
    "run_census",
    "verify_claim",
    "verify_claims",
]
