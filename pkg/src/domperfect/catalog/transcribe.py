"""Turn the LaTeX picture source of the G1-G17 figure into candidate edge lists.

Vertices are the ``\\circle*`` dots, numbered per panel in source order.
Edges come from ``\\drawline`` polyline segments between dots.  A straight
segment that runs exactly through a third dot is ambiguous in the drawing: it can
be read as two edges meeting at that dot ("split") or one edge passing over
it ("pass").  Curved ``\\bezier`` strokes are read as optional edges.  Every
combination of readings is produced; adjudication happens elsewhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import product

_NUM = r"(-?[\d.]+)"
_PUT = re.compile(rf"\\put\({_NUM},{_NUM}\)\{{\\circle\*")
_PAIR = re.compile(rf"\({_NUM},{_NUM}\)")
_SNAP = Fraction(1, 10)

Point = tuple[Fraction, Fraction]


def _panel(p: Point) -> str:
    x, y = p
    if y <= 5:
        return "G17"
    row = 0 if y >= Fraction(31, 2) else 1 if y >= Fraction(25, 2) else 2 if y >= Fraction(19, 2) else 3
    col = int((x - Fraction(1, 2)) // 4)
    return f"G{row * 4 + col + 1}"


@dataclass
class Panel:
    gid: str
    points: list[Point] = field(default_factory=list)
    # fixed edges, ambiguous straight segments (split, pass), optional curves
    fixed: set[tuple[int, int]] = field(default_factory=set)
    choices: list[tuple[frozenset, frozenset]] = field(default_factory=list)
    optional: list[tuple[int, int]] = field(default_factory=list)

    def index(self, p: Point) -> int:
        for i, q in enumerate(self.points):
            if abs(q[0] - p[0]) <= _SNAP and abs(q[1] - p[1]) <= _SNAP:
                return i
        raise ValueError(f"{self.gid}: no dot at {p}")

    @property
    def order(self) -> int:
        return len(self.points)


def _edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def _between(p: Point, q: Point, r: Point) -> Fraction | None:
    """Parameter t in (0,1) if ``r`` lies strictly inside segment pq."""
    (px, py), (qx, qy), (rx, ry) = p, q, r
    if (qx - px) * (ry - py) != (qy - py) * (rx - px):
        return None
    dx, dy = qx - px, qy - py
    t = (rx - px) / dx if dx else (ry - py) / dy
    return t if 0 < t < 1 else None


def parse_picture(text: str) -> dict[str, Panel]:
    panels: dict[str, Panel] = {}
    strokes = []
    for raw in text.splitlines():
        line = raw.strip()
        m = _PUT.match(line)
        if m:
            p = (Fraction(m.group(1)), Fraction(m.group(2)))
            gid = _panel(p)
            panels.setdefault(gid, Panel(gid)).points.append(p)
        elif line.startswith(("\\drawline", "\\bezier")):
            pts = [(Fraction(a), Fraction(b)) for a, b in _PAIR.findall(line)]
            strokes.append((line.startswith("\\bezier"), pts))
    for curved, pts in strokes:
        panel = panels[_panel(pts[0])]
        if curved:
            a, b = panel.index(pts[0]), panel.index(pts[-1])
            panel.optional.append(_edge(a, b))
            continue
        for p, q in zip(pts, pts[1:]):
            a, b = panel.index(p), panel.index(q)
            if a == b:
                continue
            inside = sorted(
                (t, i) for i, r in enumerate(panel.points) if (t := _between(panel.points[a], panel.points[b], r)) is not None
            )
            if not inside:
                panel.fixed.add(_edge(a, b))
                continue
            chain = [a] + [i for _, i in inside] + [b]
            split = frozenset(_edge(x, y) for x, y in zip(chain, chain[1:]))
            passing = frozenset({_edge(a, b)})
            panel.choices.append((split, passing))
    return panels


def load_picture() -> dict[str, Panel]:
    text = resources.files(__package__).joinpath("figure2.tex").read_text()
    return parse_picture(text)


@dataclass(frozen=True)
class Candidate:
    gid: str
    order: int
    edges: tuple[tuple[int, int], ...]
    reading: str  # one letter per ambiguity: s(plit)/p(ass), then c(urve kept)/o(mitted)

    @property
    def passes(self) -> int:
        return self.reading.count("p") + self.reading.count("o")


def candidates(panel: Panel) -> list[Candidate]:
    """All readings of a panel, fewest departures from the literal reading first."""
    out = []
    alts = [(("s", s), ("p", p)) for s, p in panel.choices] + [
        (("c", frozenset({e})), ("o", frozenset())) for e in panel.optional
    ]
    seen = set()
    for combo in product(*alts):
        edges = set(panel.fixed)
        for _, es in combo:
            edges |= es
        key = frozenset(edges)
        reading = "".join(tag for tag, _ in combo)
        if key in seen:
            continue
        seen.add(key)
        out.append(Candidate(panel.gid, panel.order, tuple(sorted(edges)), reading))
    out.sort(key=lambda c: (c.passes, c.reading))
    return out
