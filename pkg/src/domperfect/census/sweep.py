"""One pass over all graphs of each order, feeding many probes at once.

A probe looks at each graph (through a shared ``GraphFacts``) and updates
its ``Tally``.  Work is split by parent graph of the previous order, so
chunks are independent; tallies merge into the same result whatever the
split or the number of workers.
"""

from __future__ import annotations

import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from ..graph import _unchecked
from .facts import GraphFacts
from .generation import MAX_ENUMERATION_ORDER, _children, _level

KEEP_VIOLATIONS = 20


@dataclass
class Tally:
    checked: int = 0
    violation_count: int = 0
    violations: list = field(default_factory=list)  # (order, graph6), smallest first
    collected: list = field(default_factory=list)
    seconds: float = 0.0

    def violate(self, facts: GraphFacts) -> None:
        self.violation_count += 1
        if len(self.violations) < KEEP_VIOLATIONS:
            self.violations.append((facts.graph.n, facts.graph6))

    def merge(self, other: Tally) -> None:
        self.checked += other.checked
        self.violation_count += other.violation_count
        self.violations = sorted(self.violations + other.violations)[:KEEP_VIOLATIONS]
        self.collected.extend(other.collected)
        self.seconds += other.seconds

    def normalise(self) -> None:
        self.violations.sort()
        self.violations = self.violations[:KEEP_VIOLATIONS]
        self.collected.sort()


Visitor = Callable[[GraphFacts, Tally], None]


@dataclass(frozen=True)
class Probe:
    id: str
    max_n: int
    visit: Visitor
    min_n: int = 1


# probes are looked up by id inside worker processes
REGISTRY: dict[str, Callable[[int], Probe]] = {}


def _visit_all(graphs: Iterable, probes: list[Probe], tallies: dict[str, Tally]) -> None:
    clock = time.perf_counter
    for g in graphs:
        facts = GraphFacts(g)
        n = g.n
        for p in probes:
            if p.min_n <= n <= p.max_n:
                t = tallies[p.id]
                start = clock()
                p.visit(facts, t)
                t.seconds += clock() - start


def _chunk(n: int, lo: int, hi: int, specs: list[tuple[str, int]]) -> dict[str, Tally]:
    probes = [REGISTRY[pid](m) for pid, m in specs]
    tallies = {p.id: Tally() for p in probes}
    parents = _level(n - 1)[lo:hi]

    def graphs():
        for parent in parents:
            for code in _children(parent):
                yield _unchecked(n, code)

    _visit_all(graphs(), probes, tallies)
    return tallies


def run_sweep(probes: list[Probe], jobs: int = 1, progress: Callable[[int], None] | None = None) -> dict[str, Tally]:
    """Feed every graph of order 1..max(probe.max_n) to the probes that want it."""
    if not probes:
        return {}
    top = max(p.max_n for p in probes)
    if not 1 <= top <= MAX_ENUMERATION_ORDER:
        raise ValueError(f"sweep order must be in 1..{MAX_ENUMERATION_ORDER}, got {top}")
    tallies = {p.id: Tally() for p in probes}
    specs = [(p.id, p.max_n) for p in probes]
    pool = None
    if jobs > 1:
        pool = ProcessPoolExecutor(jobs, mp_context=multiprocessing.get_context("fork"))
    try:
        for n in range(1, top + 1):
            active = [p for p in probes if p.min_n <= n <= p.max_n]
            if active:
                if n == 1 or pool is None:
                    parts = [_chunk(n, 0, None, specs)] if n > 1 else [_single(specs)]
                else:
                    parents = len(_level(n - 1))  # computed before workers fork
                    step = max(1, -(-parents // (jobs * 4)))
                    futures = [pool.submit(_chunk, n, lo, lo + step, specs) for lo in range(0, parents, step)]
                    parts = [f.result() for f in futures]
                for part in parts:
                    for pid, t in part.items():
                        tallies[pid].merge(t)
            if progress is not None:
                progress(n)
    finally:
        if pool is not None:
            pool.shutdown()
    for t in tallies.values():
        t.normalise()
    return tallies


def _single(specs):
    probes = [REGISTRY[pid](m) for pid, m in specs]
    tallies = {p.id: Tally() for p in probes}
    _visit_all([_unchecked(1, (0,))], probes, tallies)
    return tallies
