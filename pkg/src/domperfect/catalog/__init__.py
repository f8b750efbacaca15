"""Named graphs with their expected invariants, loaded from ``catalog.txt``.

File format, one record per id::

    G1 6 0-1,1-2,...          id, order, comma separated edges
    expect gamma=2 i=3 ...     expectations for the record above
    note free text             provenance, may repeat

Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from ..graph import Graph, from_edge_list
from ..invariants import domination_value, independent_domination_value
from ..iso import are_isomorphic, canonical_form, find_induced_embedding, is_induced_embedding

FORBIDDEN_IDS = tuple(f"G{j}" for j in range(1, 18))


class CatalogError(ValueError):
    pass


class ZeroValid(CatalogError):
    """No transcription candidate meets the entry's expectations."""


class Ambiguous(CatalogError):
    """Several non-isomorphic candidates meet the expectations."""


@dataclass(frozen=True)
class Expected:
    gamma: int | None = None
    i: int | None = None
    minimal_imperfect: bool | None = None
    perfect: bool | None = None
    isomorphic_to: str | None = None
    must_contain: tuple[str, ...] = ()
    transcription_dependent: bool = False


@dataclass(frozen=True)
class PatternEntry:
    id: str
    order: int
    edges: tuple[tuple[int, int], ...]
    expected: Expected
    provenance: str = ""

    @property
    def graph(self) -> Graph:
        return _graph(self.order, self.edges)

    def as_json(self) -> dict:
        from ..graph import format_graph6

        exp = self.expected
        return {
            "id": self.id,
            "order": self.order,
            "graph6": format_graph6(self.graph),
            "edges": [list(e) for e in self.edges],
            "expected": {
                k: v
                for k, v in {
                    "gamma": exp.gamma,
                    "i": exp.i,
                    "minimal_imperfect": exp.minimal_imperfect,
                    "perfect": exp.perfect,
                    "isomorphic_to": exp.isomorphic_to,
                    "must_contain": list(exp.must_contain) or None,
                    "transcription_dependent": exp.transcription_dependent or None,
                }.items()
                if v is not None
            },
            "provenance": self.provenance,
        }


@lru_cache(maxsize=None)
def _graph(order, edges):
    return from_edge_list(order, edges)


_EDGE = re.compile(r"^(\d+)-(\d+)$")
_BOOL = {"true": True, "false": False}


def _parse_expect(tokens: list[str], where: str) -> dict:
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise CatalogError(f"{where}: expected key=value, got {tok!r}")
        key, val = tok.split("=", 1)
        if key in ("gamma", "i"):
            out[key] = int(val)
        elif key in ("minimal_imperfect", "perfect", "transcription_dependent"):
            if val not in _BOOL:
                raise CatalogError(f"{where}: {key} must be true/false")
            out[key] = _BOOL[val]
        elif key == "isomorphic_to":
            out[key] = val
        elif key == "must_contain":
            out[key] = tuple(v for v in val.split(",") if v)
        else:
            raise CatalogError(f"{where}: unknown expectation {key!r}")
    return out


def parse_catalog(text: str) -> list[PatternEntry]:
    records: list[dict] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"line {lineno}"
        head, *rest = line.split()
        if head == "expect":
            if not records:
                raise CatalogError(f"{where}: expect before any entry")
            records[-1]["expected"].update(_parse_expect(rest, where))
        elif head == "note":
            if not records:
                raise CatalogError(f"{where}: note before any entry")
            records[-1]["notes"].append(line[4:].strip())
        else:
            if len(rest) not in (1, 2):
                raise CatalogError(f"{where}: expected 'id order edges'")
            try:
                order = int(rest[0])
            except ValueError:
                raise CatalogError(f"{where}: bad order {rest[0]!r}") from None
            edges = []
            for tok in rest[1].split(",") if len(rest) == 2 else []:
                m = _EDGE.match(tok)
                if not m:
                    raise CatalogError(f"{where}: bad edge {tok!r}")
                a, b = int(m.group(1)), int(m.group(2))
                if a == b or not (0 <= a < order and 0 <= b < order):
                    raise CatalogError(f"{where}: edge {tok} inconsistent with order {order}")
                edges.append((min(a, b), max(a, b)))
            if len(set(edges)) != len(edges):
                raise CatalogError(f"{where}: repeated edge in {head}")
            records.append({"id": head, "order": order, "edges": tuple(sorted(edges)), "expected": {}, "notes": []})
    seen = set()
    entries = []
    for r in records:
        if r["id"] in seen:
            raise CatalogError(f"duplicate catalog id {r['id']!r}")
        seen.add(r["id"])
        entries.append(PatternEntry(r["id"], r["order"], r["edges"], Expected(**r["expected"]), " ".join(r["notes"])))
    return entries


def load_catalog(path: str | Path | None = None) -> list[PatternEntry]:
    if path is None:
        text = resources.files(__package__).joinpath("catalog.txt").read_text()
    else:
        text = Path(path).read_text()
    return parse_catalog(text)


@lru_cache(maxsize=1)
def _default() -> dict[str, PatternEntry]:
    return {e.id: e for e in load_catalog()}


def get(pid: str) -> PatternEntry:
    try:
        return _default()[pid]
    except KeyError:
        raise KeyError(f"no catalog entry {pid!r}") from None


def graph(pid: str) -> Graph:
    return get(pid).graph


def pattern_order(ids: Iterable[str]) -> list[str]:
    """Ascending vertex count, then catalog position."""
    cat = _default()
    pos = {k: i for i, k in enumerate(cat)}
    return sorted(ids, key=lambda k: (cat[k].order, pos[k]))


@lru_cache(maxsize=None)
def patterns(ids: tuple[str, ...]) -> tuple[tuple[str, Graph], ...]:
    return tuple((k, graph(k)) for k in pattern_order(ids))


def forbidden_patterns() -> tuple[tuple[str, Graph], ...]:
    """G1..G17 in search order."""
    return patterns(FORBIDDEN_IDS)


# --- validation -------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    entry: str
    expectation: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass
class ValidationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def for_entry(self, pid: str) -> list[Check]:
        return [c for c in self.checks if c.entry == pid]


def _entry_checks(pid: str, g: Graph, exp: Expected, lookup) -> list[Check]:
    from ..perfection import is_minimal_imperfect, is_perfect_fast, is_perfect_oracle

    checks = []
    if exp.gamma is not None:
        checks.append(Check(pid, "gamma", exp.gamma, domination_value(g)))
    if exp.i is not None:
        checks.append(Check(pid, "i", exp.i, independent_domination_value(g)))
    if exp.minimal_imperfect is not None:
        checks.append(Check(pid, "minimal_imperfect", exp.minimal_imperfect, is_minimal_imperfect(g)))
    if exp.perfect is not None:
        checks.append(Check(pid, "perfect (oracle)", exp.perfect, is_perfect_oracle(g).perfect))
        checks.append(Check(pid, "perfect (pattern check)", exp.perfect, is_perfect_fast(g).perfect))
    if exp.isomorphic_to is not None:
        checks.append(Check(pid, f"isomorphic to {exp.isomorphic_to}", True, are_isomorphic(g, lookup(exp.isomorphic_to)) is not None))
    for other in exp.must_contain:
        pattern = lookup(other)
        emb = find_induced_embedding(g, pattern)
        ok = emb is not None and is_induced_embedding(g, pattern, emb)
        checks.append(Check(pid, f"contains {other}", True, ok))
    return checks


def validate_all(entries: Sequence[PatternEntry] | None = None) -> ValidationReport:
    """Recompute every declared expectation with the solvers; failures are report rows."""
    entries = list(entries) if entries is not None else list(_default().values())
    by_id = {e.id: e for e in entries}

    def lookup(pid):
        return by_id[pid].graph if pid in by_id else graph(pid)

    report = ValidationReport()
    for e in entries:
        report.checks.extend(_entry_checks(e.id, e.graph, e.expected, lookup))
    forbidden = [e for e in entries if e.id in FORBIDDEN_IDS]
    if forbidden:
        forms = {e.id: canonical_form(e.graph) for e in forbidden}
        report.checks.append(
            Check("G1..G17", "pairwise non-isomorphic", len(forms), len(set(forms.values())))
        )
    return report


def resolve_transcription(
    candidates: Sequence[Sequence[tuple[int, int]]],
    order: int,
    expected: Expected,
    peers: Sequence[Graph] = (),
    lookup=None,
) -> tuple[tuple[int, int], ...]:
    """Pick the candidate edge list satisfying ``expected``.

    ``peers`` are graphs the answer must not be isomorphic to (the other
    resolved panels).  Candidates that pass and are isomorphic to each other
    count as one reading; the first of them is returned.
    """
    if not candidates:
        raise ValueError("need at least one candidate")
    peer_forms = {canonical_form(p) for p in peers}
    passing: dict[str, tuple] = {}
    for edges in candidates:
        g = from_edge_list(order, edges)
        if not all(c.passed for c in _entry_checks("candidate", g, expected, lookup or graph)):
            continue
        form = canonical_form(g)
        if form in peer_forms:
            continue
        passing.setdefault(form, tuple(sorted((min(a, b), max(a, b)) for a, b in edges)))
    if not passing:
        raise ZeroValid(f"none of {len(candidates)} candidates meets the expectations")
    if len(passing) > 1:
        raise Ambiguous(f"{len(passing)} non-isomorphic candidates meet the expectations")
    return next(iter(passing.values()))
