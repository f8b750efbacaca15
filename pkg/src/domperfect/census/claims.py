"""Registry of checkable statements about domination perfect graphs.

Static claims look at a handful of catalog graphs.  Sweep claims are an
implication or equivalence tested on every graph up to some order; their
visitors test the cheap hypothesis filters first and only then reach for
the solvers.  ``verify_claims`` runs any selection in one shared sweep.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .. import catalog
from ..graph import Graph, format_graph6, induced_subgraph, vset
from ..invariants import Pair, bc_bound, domination_value, edge_in_no_triangle, independent_domination_value
from ..invariants import is_dominating, is_independent, is_planar, small_independent_dominating
from ..iso import are_isomorphic, canonical_form, contains_any, find_induced_embedding
from ..perfection import is_perfect_fast, is_perfect_oracle
from .facts import GraphFacts
from .sweep import REGISTRY, Probe, Tally, run_sweep

TRANSCRIPTION_DEPENDENT = frozenset({"C9", "C10", "C17"})


class UnknownClaim(KeyError):
    pass


@dataclass(frozen=True)
class ClaimVerdict:
    claim: str
    title: str
    passed: bool
    checked: int
    counterexample: str | None
    seconds: float
    max_n: int | None = None
    transcription_dependent: bool = False
    violations: int = 0
    details: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def as_json(self) -> dict:
        return {
            "kind": "claim",
            "claim": self.claim,
            "title": self.title,
            "verdict": self.verdict,
            "checked": self.checked,
            "violations": self.violations,
            "counterexample": self.counterexample,
            "runtime_s": round(self.seconds, 3),
            "max_n": self.max_n,
            "transcription_dependent": self.transcription_dependent,
            "details": self.details,
        }


# --- static claims -----------------------------------------------------------------


def _g(pid: str) -> Graph:
    return catalog.graph(pid)


def _c1():
    details, bad = {}, None
    for pid in ("H5", "H6"):
        h = _g(pid)
        found = small_independent_dominating(h)
        pair = [found.first, found.second] if isinstance(found, Pair) else None
        ok_pair = pair is not None and is_independent(h, vset(pair)) and is_dominating(h, vset(pair))
        fast, oracle = is_perfect_fast(h).perfect, is_perfect_oracle(h).perfect
        gamma, i = domination_value(h), independent_domination_value(h)
        details[pid] = {"gamma": gamma, "i": i, "independent_dominating_pair": pair, "fast": fast, "oracle": oracle}
        if not (ok_pair and fast and oracle and i == 2):
            bad = bad or format_graph6(h)
    return bad is None, bad, details


def _c2():
    details, bad = {}, None
    for u, h in (("U1", "H5"), ("U2", "H6")):
        iso = are_isomorphic(_g(u), _g(h))
        details[f"{u}~{h}"] = None if iso is None else [iso[v] for v in range(len(iso))]
        if iso is None:
            bad = bad or format_graph6(_g(u))
    return bad is None, bad, details


CONTAINMENT_TABLE = {
    **{f"G{m}": f"H{m - 1}" for m in range(1, 6)},
    "G6": "H7",
    **{f"G{m}": "H5" for m in range(7, 13)},
    **{f"G{m}": "H6" for m in range(13, 18)},
}


def _c3():
    hs = [f"H{k}" for k in range(8)]
    table, bad = {}, None
    for gid, expected in CONTAINMENT_TABLE.items():
        g = _g(gid)
        found = [h for h in hs if find_induced_embedding(g, _g(h)) is not None]
        table[gid] = found
        if expected not in found:
            bad = bad or format_graph6(g)
    return bad is None, bad, {"expected": CONTAINMENT_TABLE, "found": table}


def _c4():
    details, bad = {}, None
    for big, small in (("H8", "H1"), ("H9", "H2")):
        emb = find_induced_embedding(_g(big), _g(small))
        details[f"{big}>{small}"] = None if emb is None else list(emb.mapping)
        if emb is None:
            bad = bad or format_graph6(_g(big))
    return bad is None, bad, details


def _c5():
    # the refutation holds when H5 is perfect but (trivially) not H5-free
    h = _g("H5")
    perfect = is_perfect_oracle(h).perfect and is_perfect_fast(h).perfect
    self_copy = find_induced_embedding(h, h) is not None
    ok = perfect and self_copy
    return ok, format_graph6(h), {"H5_perfect": perfect, "H5_contains_H5": self_copy, "refuting_graph": "H5"}


def s_minus_edges() -> list[tuple[tuple[int, int], Graph]]:
    """S with one edge between a degree-5 and a degree-4 vertex removed."""
    s = _g("S")
    out = []
    for u, v in s.edges():
        if sorted((s.degree(u), s.degree(v))) == [4, 5]:
            adj = list(s.adj)
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            out.append(((u, v), Graph(s.n, tuple(adj))))
    return out


def _c17():
    pats = catalog.patterns(tuple(f"G{j}" for j in range(1, 14)) + ("S",))
    details, bad = {}, None
    variants = s_minus_edges()
    for (u, v), h in variants:
        hit = contains_any(h, pats)
        details[f"{u}-{v}"] = {"graph6": format_graph6(h), "canonical": canonical_form(h), "contains": hit and hit[0]}
        if hit is None:
            bad = bad or format_graph6(h)
    if not variants:
        return False, format_graph6(_g("S")), {"error": "S has no edge joining degrees 5 and 4"}
    return bad is None, bad, details


def _c8_static():
    return {gid: is_planar(_g(gid)) for gid in (f"G{j}" for j in range(14, 18))}


# --- sweep visitors ----------------------------------------------------------------


def _implication(hypothesis: Callable[[GraphFacts], bool], conclusion: Callable[[GraphFacts], bool]):
    def visit(f: GraphFacts, t: Tally) -> None:
        if hypothesis(f):
            t.checked += 1
            if not conclusion(f):
                t.violate(f)

    return visit


def _c11(f: GraphFacts, t: Tally) -> None:
    for k in (3, 4, 5):
        if f.star_free(k):
            t.checked += 1
            if f.i > bc_bound(f.gamma, k):
                t.violate(f)
                return


def _c14_hyp(f: GraphFacts) -> bool:
    d = f.diameter
    return d is not None and d > 2 and f.complement_fast_perfect


def _c13(f: GraphFacts, t: Tally) -> None:
    if f.gamma == 2 and f.i > 2:
        t.checked += 1
        t.collected.append((f.graph.n, f.graph6, f.minimal_imperfect))


def _free_of(*pids):
    return lambda f: not any(f.contains(p) for p in pids)


SWEEP_VISITORS = {
    "C6": _implication(lambda f: f.triangle_free, lambda f: f.perfect == f.free_of_prefix(4)),
    "C7": _implication(lambda f: f.chordal, lambda f: f.perfect == f.free_of_prefix(1)),
    "C8": _implication(lambda f: f.planar and f.free_of_prefix(13), lambda f: f.perfect),
    "C9": _implication(lambda f: f.free_of_prefix(13) and _free_of("S")(f), lambda f: f.perfect),
    "C10": _implication(lambda f: f.free_of_prefix(4) and _free_of("T1", "T2")(f), lambda f: f.perfect),
    "C11": _c11,
    "C12": _implication(lambda f: not f.sharing_stars(3), lambda f: f.i <= bc_bound(f.gamma, 3)),
    "C13": _c13,
    "C14": _implication(_c14_hyp, lambda f: edge_in_no_triangle(f.graph) is not None),
    "C15": _implication(lambda f: True, lambda f: f.full_check == f.perfect),
    "C16": _implication(lambda f: True, lambda f: f.fast_perfect == f.perfect),
    "C18": _implication(lambda f: f.star_free(3), lambda f: f.gamma == f.i),
}


@dataclass(frozen=True)
class Claim:
    id: str
    title: str
    max_n: int | None = None  # sweep ceiling; None for static claims
    fixed_n: bool = False  # the statement itself bounds the order
    static: Callable | None = None

    @property
    def transcription_dependent(self) -> bool:
        return self.id in TRANSCRIPTION_DEPENDENT


CLAIMS: dict[str, Claim] = {
    c.id: c
    for c in (
        Claim("C1", "H5 and H6 are domination perfect with i = 2", static=_c1),
        Claim("C2", "U1 is isomorphic to H5 and U2 to H6", static=_c2),
        Claim("C3", "each G_m contains its listed graph among H0..H7", static=_c3),
        Claim("C4", "H8 contains H1 and H9 contains H2 induced", static=_c4),
        Claim("C5", "the proposed H-family characterization fails on H5", static=_c5),
        Claim("C6", "triangle-free: perfect iff {G1..G4}-free", 9),
        Claim("C7", "chordal: perfect iff G1-free", 9),
        Claim("C8", "planar and {G1..G13}-free implies perfect; G14..G17 non-planar", 9),
        Claim("C9", "{G1..G13, S}-free implies perfect", 9),
        Claim("C10", "{G1..G4, T1, T2}-free implies perfect", 9),
        Claim("C11", "K1,k-free implies i <= gamma(k-2)-(k-3), k = 3, 4, 5", 8),
        Claim("C12", "no two claws sharing exactly their centre edge implies i <= gamma", 8),
        Claim("C13", "family A has exactly 13 minimal imperfect members, isomorphic to G1..G13", 8, fixed_n=True),
        Claim("C14", "diam > 2 and complement {G1..G17}-free implies an edge in no triangle", 8),
        Claim("C15", "the full hereditary check agrees with the gamma = 2 check", 8),
        Claim("C16", "forbidden-subgraph check agrees with the brute-force oracle", 9),
        Claim("C17", "S minus a degree-5/degree-4 edge contains one of G1..G13, S", static=_c17),
        Claim("C18", "claw-free implies gamma = i", 9),
    )
}


def _claim(cid: str) -> Claim:
    try:
        return CLAIMS[cid]
    except KeyError:
        raise UnknownClaim(f"unknown claim id {cid!r}; known: {', '.join(CLAIMS)}") from None


for _cid, _visit in SWEEP_VISITORS.items():
    REGISTRY[_cid] = lambda m, _cid=_cid, _visit=_visit: Probe(_cid, m, _visit)


def _effective_n(c: Claim, max_n: int | None) -> int:
    if max_n is None or c.fixed_n:
        return c.max_n
    return max_n


def _finish(c: Claim, n: int, t: Tally) -> ClaimVerdict:
    cex = t.violations[0][1] if t.violations else None
    passed = t.violation_count == 0
    details: dict = {}
    seconds = t.seconds
    if c.id == "C8":
        start = time.perf_counter()
        planar = _c8_static()
        seconds += time.perf_counter() - start
        details["planar"] = planar
        if any(planar.values()):
            passed = False
            cex = cex or format_graph6(_g(next(k for k, v in planar.items() if v)))
    if c.id == "C13":
        start = time.perf_counter()
        minimal = [g6 for _, g6, is_min in t.collected if is_min]
        target = {canonical_form(_g(f"G{j}")): f"G{j}" for j in range(1, 14)}
        named = sorted(target.get(g6, "?") for g6 in minimal)
        details = {"family_A_size": len(t.collected), "minimal_count": len(minimal), "minimal": minimal, "matched": named}
        passed = len(minimal) == 13 and set(minimal) == set(target)
        if not passed:
            extra = sorted(set(minimal) - set(target))
            cex = extra[0] if extra else None
        seconds += time.perf_counter() - start
    return ClaimVerdict(
        c.id, c.title, passed, t.checked, cex, seconds, n, c.transcription_dependent, t.violation_count, details
    )


def verify_claims(ids: Sequence[str] | None = None, max_n: int | None = None, jobs: int = 1, extra_probes=()):
    """Verdicts for ``ids`` (all claims by default), sharing one sweep.

    Returns ``(verdicts, tallies)``; ``tallies`` holds the extra probes' results too.
    """
    chosen = [_claim(cid) for cid in (ids or list(CLAIMS))]
    verdicts: dict[str, ClaimVerdict] = {}
    probes = list(extra_probes)
    for c in chosen:
        if c.static is not None:
            start = time.perf_counter()
            passed, witness, details = c.static()
            verdicts[c.id] = ClaimVerdict(
                c.id, c.title, passed, 1, None if passed else witness, time.perf_counter() - start,
                None, c.transcription_dependent, 0 if passed else 1, details,
            )
        else:
            probes.append(REGISTRY[c.id](_effective_n(c, max_n)))
    tallies = run_sweep(probes, jobs=jobs)
    for c in chosen:
        if c.static is None:
            verdicts[c.id] = _finish(c, _effective_n(c, max_n), tallies[c.id])
    return [verdicts[c.id] for c in chosen], tallies


def verify_claim(cid: str, max_n: int | None = None, jobs: int = 1) -> ClaimVerdict:
    return verify_claims([cid], max_n, jobs)[0][0]
