"""Figures for a census report, written as PNG files."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

PASS_COLOUR = "#4c9a5b"
FAIL_COLOUR = "#c44e52"


def _orders_figure(report, path: Path) -> Path:
    rows = [r for r in report.rows() if r["kind"] == "order"]
    ns = [r["n"] for r in rows]
    fig, (left, right) = plt.subplots(1, 2, figsize=(9, 3.6))

    left.semilogy(ns, [r["known_count"] for r in rows], "o--", color="0.6", label="known counts")
    left.semilogy(ns, [max(r["count"], 1) for r in rows], ".-", color="C0", label="enumerated")
    fam = [(r["n"], r["family_A"]) for r in rows if r.get("family_A")]
    if fam:
        left.semilogy(*zip(*fam), "s-", color="C1", markersize=4, label="family A")
    left.set_xlabel("order n")
    left.set_ylabel("graphs")
    left.legend(frameon=False, fontsize=8)

    minimal = [len(r.get("minimal_imperfect", [])) for r in rows]
    right.bar(ns, minimal, color="C3")
    for n, k in zip(ns, minimal):
        if k:
            right.annotate(str(k), (n, k), ha="center", va="bottom", fontsize=8)
    right.set_xlabel("order n")
    right.set_ylabel("minimal imperfect graphs")
    right.set_xticks(ns)

    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _claims_figure(report, path: Path) -> Path:
    claims = report.claims
    fig, ax = plt.subplots(figsize=(9, 3.4))
    xs = range(len(claims))
    colours = [PASS_COLOUR if c.passed else FAIL_COLOUR for c in claims]
    ax.bar(xs, [max(c.checked, 1) for c in claims], color=colours)
    ax.set_yscale("log")
    ax.set_xticks(list(xs), [c.claim + ("*" if c.transcription_dependent else "") for c in claims], fontsize=8)
    ax.set_ylabel("graphs checked")
    ax.set_title("claim verdicts (green pass, red fail; * transcription-dependent)", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_census(report, outdir: str | Path) -> list[Path]:
    """Write the census figures into ``outdir`` and return their paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = [_orders_figure(report, outdir / f"census_orders_n{report.max_n}.png")]
    if report.claims:
        paths.append(_claims_figure(report, outdir / f"census_claims_n{report.max_n}.png"))
    return paths
