"""Census of small graphs: counts, family A, minimal imperfect graphs, claim verdicts."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Sequence

from .. import catalog
from ..graph import Graph, parse_graph6
from ..iso import canonical_form
from .claims import CLAIMS, ClaimVerdict, verify_claims
from .facts import GraphFacts
from .generation import KNOWN_COUNTS
from .sweep import REGISTRY, Probe, Tally, run_sweep

FAMILY_A_MAX_ORDER = 8
MINIMAL_MAX_ORDER = 9


def _count(f: GraphFacts, t: Tally) -> None:
    t.checked += 1
    t.collected.append((f.graph.n, 1))


def _minimal(f: GraphFacts, t: Tally) -> None:
    t.checked += 1
    if f.minimal_imperfect:
        t.collected.append((f.graph.n, f.graph6))


def _family_a(f: GraphFacts, t: Tally) -> None:
    if f.gamma == 2 and f.i > 2:
        t.checked += 1
        t.collected.append((f.graph.n, f.graph6, f.minimal_imperfect))


REGISTRY["count"] = lambda m: Probe("count", m, _count)
REGISTRY["minimal"] = lambda m: Probe("minimal", m, _minimal)
REGISTRY["family_A"] = lambda m: Probe("family_A", m, _family_a)


def _named(forms) -> dict[str, str]:
    known = {canonical_form(catalog.graph(pid)): pid for pid in catalog.FORBIDDEN_IDS}
    return {g6: known.get(g6, "?") for g6 in forms}


def family_A() -> list[Graph]:
    """Every graph on at most 8 vertices with gamma = 2 and i > 2, canonical, by order."""
    t = run_sweep([REGISTRY["family_A"](FAMILY_A_MAX_ORDER)])["family_A"]
    return [parse_graph6(g6) for _, g6, _ in t.collected]


def minimal_imperfect_census(max_n: int = MINIMAL_MAX_ORDER, jobs: int = 1) -> dict[int, list[Graph]]:
    if not 1 <= max_n <= MINIMAL_MAX_ORDER:
        raise ValueError(f"max_n must be in 1..{MINIMAL_MAX_ORDER}, got {max_n}")
    t = run_sweep([REGISTRY["minimal"](max_n)], jobs=jobs)["minimal"]
    out: dict[int, list[Graph]] = {n: [] for n in range(1, max_n + 1)}
    for n, g6 in t.collected:
        out[n].append(parse_graph6(g6))
    return out


@dataclass
class CensusReport:
    max_n: int
    counts: dict[int, int]
    family_a: list[tuple[int, str, bool]] | None
    minimal: dict[int, list[str]] | None
    claims: list[ClaimVerdict] = field(default_factory=list)
    seconds: float = 0.0
    tallies: dict[str, Tally] = field(default_factory=dict, repr=False)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def rows(self) -> list[dict]:
        out = []
        named = _named(g6 for ms in (self.minimal or {}).values() for g6 in ms)
        per_a: dict[int, int] = {}
        for n, _, _ in self.family_a or ():
            per_a[n] = per_a.get(n, 0) + 1
        for n in range(1, self.max_n + 1):
            row = {"kind": "order", "n": n, "count": self.counts.get(n, 0), "known_count": KNOWN_COUNTS[n]}
            if self.family_a is not None and n <= FAMILY_A_MAX_ORDER:
                row["family_A"] = per_a.get(n, 0)
            if self.minimal is not None and n in self.minimal:
                row["minimal_imperfect"] = self.minimal[n]
                row["minimal_imperfect_ids"] = [named[g6] for g6 in self.minimal[n]]
            out.append(row)
        if self.family_a is not None:
            out.append(
                {
                    "kind": "family_A",
                    "complete": self.max_n >= FAMILY_A_MAX_ORDER,
                    "size": len(self.family_a),
                    "minimal_imperfect": sum(1 for *_, m in self.family_a if m),
                    "members": [g6 for _, g6, _ in self.family_a],
                    "derived": True,
                }
            )
        out.extend(c.as_json() for c in self.claims)
        out.append({"kind": "summary", "max_n": self.max_n, "verdict": "pass" if self.passed else "fail",
                    "runtime_s": round(self.seconds, 3)})
        return out

    def to_jsonl(self) -> str:
        return "\n".join(json.dumps(r, sort_keys=True) for r in self.rows())

    def table(self) -> str:
        lines = [f"{'n':>3} {'graphs':>8} {'known':>8} {'famA':>6}  minimal imperfect"]
        for r in self.rows():
            if r["kind"] != "order":
                continue
            ok = "" if r["count"] == r["known_count"] else "  MISMATCH"
            fa = r.get("family_A", "")
            ids = " ".join(r.get("minimal_imperfect_ids", []))
            lines.append(f"{r['n']:>3} {r['count']:>8} {r['known_count']:>8} {fa!s:>6}  {ids}{ok}")
        if self.family_a is not None:
            m = sum(1 for *_, x in self.family_a if x)
            note = "" if self.max_n >= FAMILY_A_MAX_ORDER else " (partial)"
            lines.append(f"family A: {len(self.family_a)} graphs, {m} minimal imperfect (derived count){note}")
        if self.claims:
            lines.append("")
            lines.append(f"{'claim':<6} {'verdict':<8} {'checked':>8} {'time':>8}  statement")
            for c in self.claims:
                flag = " [transcription-dependent]" if c.transcription_dependent else ""
                tail = f"  counterexample {c.counterexample}" if c.counterexample else ""
                lines.append(f"{c.claim:<6} {c.verdict:<8} {c.checked:>8} {c.seconds:>7.1f}s  {c.title}{flag}{tail}")
        lines.append(f"overall: {'pass' if self.passed else 'fail'} in {self.seconds:.1f}s")
        return "\n".join(lines)


def run_census(max_n: int = 9, claims: Sequence[str] | None = (), jobs: int = 1, extra_probes=()) -> CensusReport:
    """Counts and the minimal census up to ``max_n``, family A, and the chosen claims.

    ``claims=None`` runs every claim; the default runs none.  Tallies of
    ``extra_probes`` ride along in ``report.tallies``.
    """
    start = time.perf_counter()
    extra = [REGISTRY["count"](max_n), REGISTRY["family_A"](min(max_n, FAMILY_A_MAX_ORDER)), *extra_probes]
    if max_n <= MINIMAL_MAX_ORDER:
        extra.append(REGISTRY["minimal"](max_n))
    ids = list(CLAIMS) if claims is None else list(claims)
    if ids:
        verdicts, tallies = verify_claims(ids, max_n, jobs, extra_probes=extra)
    else:
        verdicts, tallies = [], run_sweep(extra, jobs=jobs)
    counts: dict[int, int] = {}
    for n, _ in tallies["count"].collected:
        counts[n] = counts.get(n, 0) + 1
    minimal = None
    if "minimal" in tallies:
        minimal = {n: [] for n in range(1, max_n + 1)}
        for n, g6 in tallies["minimal"].collected:
            minimal[n].append(g6)
    return CensusReport(
        max_n, counts, tallies["family_A"].collected, minimal, verdicts, time.perf_counter() - start, tallies
    )
