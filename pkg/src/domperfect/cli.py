"""Command-line interface: ``domperfect <subcommand> ...``.

Graph arguments are graph6 strings; with none given, ``compute`` and
``check`` read one graph6 per line from stdin and answer line by line.
Exit status: 0 success, 1 an expectation or claim failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Iterable, TextIO

from . import catalog
from .graph import GraphError, bits, format_graph6, is_triangle_free, parse_graph6
from .invariants import domination_number, independent_domination_number, is_chordal, is_planar, is_star_free
from .perfection import Certificate, OracleBudgetError, is_perfect_fast, is_perfect_oracle, transform_dominating_set

OK, FAILED, USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _set(mask: int) -> list[int]:
    return list(bits(mask))


def _braces(mask: int) -> str:
    return "{" + ",".join(map(str, bits(mask))) + "}"


class Output:
    def __init__(self, as_json: bool, stream: TextIO):
        self.as_json = as_json
        self.stream = stream

    def emit(self, record: dict, text: str) -> None:
        if self.as_json:
            self.stream.write(json.dumps(record, sort_keys=True) + "\n")
        else:
            self.stream.write(text + "\n")


def _inputs(args_graphs: list[str], stdin: TextIO) -> Iterable[str]:
    if args_graphs:
        yield from args_graphs
        return
    for line in stdin:
        line = line.strip()
        if line:
            yield line


def _parse(text: str):
    try:
        return parse_graph6(text)
    except GraphError as e:
        raise InputError(f"malformed graph6 {text!r}: {e}") from None


def _error(out: Output, text: str, message: str) -> None:
    out.emit({"kind": "error", "input": text, "verdict": "error", "message": message}, f"error: {message}")


# --- subcommands ------------------------------------------------------------------


def cmd_compute(ns, out: Output, stdin) -> int:
    code = OK
    for text in _inputs(ns.graphs, stdin):
        try:
            g = _parse(text)
            if g.n == 0:
                raise InputError("gamma and i are undefined on the empty graph")
        except InputError as e:
            _error(out, text, str(e))
            code = USAGE
            continue
        gamma, i = domination_number(g), independent_domination_number(g)
        flags = {
            "chordal": is_chordal(g),
            "planar": is_planar(g),
            "triangle_free": is_triangle_free(g),
            "claw_free": is_star_free(g, 3),
        }
        rec = {
            "kind": "compute",
            "input": text,
            "gamma": gamma.value,
            "i": i.value,
            "witness": {"gamma": _set(gamma.witness), "i": _set(i.witness)},
            **flags,
        }
        shown = " ".join(f"{k}={'yes' if v else 'no'}" for k, v in flags.items())
        out.emit(
            rec,
            f"{text} gamma={gamma.value} i={i.value} gamma_set={_braces(gamma.witness)} "
            f"i_set={_braces(i.witness)} {shown}",
        )
    return code


def cmd_check(ns, out: Output, stdin) -> int:
    code = OK
    for text in _inputs(ns.graphs, stdin):
        try:
            g = _parse(text)
            verdict = is_perfect_oracle(g) if ns.oracle else is_perfect_fast(g)
        except (InputError, OracleBudgetError) as e:
            _error(out, text, str(e))
            code = USAGE
            continue
        if verdict.perfect:
            out.emit({"kind": "check", "input": text, "verdict": "perfect", "witness": None}, f"{text} perfect")
            continue
        if ns.expect_perfect and code == OK:
            code = FAILED
        emb = verdict.embedding
        rec = {
            "kind": "check",
            "input": text,
            "verdict": "imperfect",
            "pattern": verdict.pattern,
            "witness": _set(verdict.witness),
            "gamma": verdict.gamma,
            "i": verdict.i,
            "embedding": None if emb is None else list(emb.mapping),
        }
        mapping = "" if emb is None else " embedding " + " ".join(f"{p}->{v}" for p, v in enumerate(emb.mapping))
        out.emit(rec, f"{text} imperfect {verdict.pattern} witness {_braces(verdict.witness)}{mapping}")
    return code


def _dom_set(text: str, n: int) -> int:
    try:
        vs = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"--dom expects comma separated vertex numbers, got {text!r}") from None
    if any(not 0 <= v < n for v in vs):
        raise InputError(f"--dom vertices must lie in 0..{n - 1}")
    mask = 0
    for v in vs:
        mask |= 1 << v
    return mask


def cmd_transform(ns, out: Output, stdin) -> int:
    try:
        g = _parse(ns.graph)
        d = _dom_set(ns.dom, g.n)
        outcome = transform_dominating_set(g, d)
    except (InputError, GraphError) as e:
        _error(out, ns.graph, str(e))
        return USAGE
    steps = [{"removed": [s.u, s.v], "added": list(s.replacement)} for s in outcome.steps]
    if isinstance(outcome, Certificate):
        emb = outcome.embedding
        rec = {
            "kind": "transform",
            "input": ns.graph,
            "verdict": "certificate",
            "pattern": outcome.pattern,
            "witness": _set(outcome.subgraph),
            "embedding": None if emb is None else list(emb.mapping),
            "steps": steps,
        }
        out.emit(rec, f"{ns.graph} certificate {outcome.pattern} subgraph {_braces(outcome.subgraph)} after {len(steps)} steps")
        return OK
    s = outcome.dominating_set
    rec = {"kind": "transform", "input": ns.graph, "verdict": "independent", "witness": _set(s), "steps": steps}
    out.emit(rec, f"{ns.graph} independent {_braces(s)} from {_braces(d)} in {len(steps)} steps")
    return OK


def cmd_census(ns, out: Output, stdin) -> int:
    from .census import CLAIMS, MAX_ENUMERATION_ORDER, UnknownClaim, run_census

    if not 1 <= ns.max_n <= MAX_ENUMERATION_ORDER:
        _error(out, str(ns.max_n), f"--max-n must be in 1..{MAX_ENUMERATION_ORDER}")
        return USAGE
    if ns.max_n == MAX_ENUMERATION_ORDER and not ns.allow_ten:
        _error(out, str(ns.max_n), "order 10 takes hours; pass --allow-ten to run it")
        return USAGE
    if ns.jobs < 1:
        _error(out, str(ns.jobs), "--jobs must be positive")
        return USAGE
    if ns.claims in (None, ""):
        ids = []
    elif ns.claims == "all":
        ids = list(CLAIMS)
    else:
        ids = [c.strip() for c in ns.claims.split(",") if c.strip()]
    try:
        report = run_census(ns.max_n, ids, jobs=ns.jobs)
    except UnknownClaim as e:
        _error(out, ns.claims, e.args[0])
        return USAGE
    if out.as_json:
        out.stream.write(report.to_jsonl() + "\n")
    else:
        out.stream.write(report.table() + "\n")
    if ns.figures:
        from .plotting import plot_census

        for path in plot_census(report, Path(ns.figures)):
            out.emit({"kind": "figure", "path": str(path)}, f"figure {path}")
    return OK if report.passed else FAILED


def cmd_catalog(ns, out: Output, stdin) -> int:
    if ns.action == "list":
        for e in catalog.load_catalog():
            rec = {"kind": "catalog", **e.as_json()}
            rec.pop("provenance")
            out.emit(rec, f"{e.id:<4} n={e.order:<3} m={len(e.edges):<3} {format_graph6(e.graph)}")
        return OK
    if ns.action == "show":
        if not ns.id:
            _error(out, "", "catalog show needs an id")
            return USAGE
        try:
            e = catalog.get(ns.id)
        except KeyError as err:
            _error(out, ns.id, err.args[0])
            return USAGE
        edges = " ".join(f"{a}-{b}" for a, b in e.edges)
        out.emit({"kind": "catalog", **e.as_json()}, f"{e.id} order {e.order}\nedges {edges}\ngraph6 {format_graph6(e.graph)}\n{e.provenance}")
        return OK
    report = catalog.validate_all()
    for c in report.checks:
        rec = {"kind": "validation", "input": c.entry, "check": c.expectation, "expected": c.expected,
               "actual": c.actual, "verdict": "pass" if c.passed else "fail"}
        out.emit(rec, f"{c.entry:<8} {c.expectation:<28} {'ok' if c.passed else f'FAIL expected {c.expected} got {c.actual}'}")
    return OK if report.passed else FAILED


# --- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON lines")

    p = argparse.ArgumentParser(prog="domperfect", description="Domination perfect graphs toolkit.")
    p.add_argument("--json", action="store_true", help="emit JSON lines")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="gamma, i, witnesses and structural flags")
    c.add_argument("graphs", nargs="*", metavar="G6")
    c.set_defaults(func=cmd_compute)

    c = sub.add_parser("check", parents=[common], help="domination perfection verdict")
    c.add_argument("graphs", nargs="*", metavar="G6")
    c.add_argument("--oracle", action="store_true", help="brute force over induced subgraphs")
    c.add_argument("--expect-perfect", action="store_true", help="exit 1 if any graph is imperfect")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("transform", parents=[common], help="dominating set to independent dominating set")
    c.add_argument("graph", metavar="G6")
    c.add_argument("--dom", required=True, help="comma separated dominating set")
    c.set_defaults(func=cmd_transform)

    c = sub.add_parser("census", parents=[common], help="exhaustive census and claim checks")
    c.add_argument("--max-n", type=int, default=9)
    c.add_argument("--claims", help="comma separated claim ids, or 'all'")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--allow-ten", action="store_true", help="permit --max-n 10")
    c.add_argument("--figures", metavar="DIR", help="also write PNG figures to DIR")
    c.set_defaults(func=cmd_census)

    c = sub.add_parser("catalog", parents=[common], help="named graphs")
    c.add_argument("action", choices=["list", "show", "validate"])
    c.add_argument("id", nargs="?")
    c.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    out = Output(ns.json, stdout or sys.stdout)
    return ns.func(ns, out, stdin or sys.stdin)


if __name__ == "__main__":
    sys.exit(main())
