import json

import pytest

from domperfect import catalog
from domperfect.census import CLAIMS, UnknownClaim, run_census, verify_claim, verify_claims
from domperfect.census.claims import s_minus_edges
from domperfect.census.sweep import REGISTRY, Probe, Tally, run_sweep
from domperfect.graph import parse_graph6
from domperfect.iso import find_induced_embedding

STATIC = ["C1", "C2", "C3", "C4", "C5", "C17"]
SWEEP = [c for c in CLAIMS if c not in STATIC]


def test_registry_covers_eighteen_claims():
    assert list(CLAIMS) == [f"C{j}" for j in range(1, 19)]
    with pytest.raises(UnknownClaim):
        verify_claim("C19")


@pytest.mark.parametrize("cid", STATIC)
def test_static_claims_pass(cid):
    v = verify_claim(cid)
    assert v.passed, v.details
    assert v.counterexample is None


def test_h5_h6_pair_details():
    d = verify_claim("C1").details
    for pid in ("H5", "H6"):
        assert d[pid]["i"] == 2 and d[pid]["fast"] and d[pid]["oracle"]
        assert len(d[pid]["independent_dominating_pair"]) == 2


def test_containment_table_details():
    d = verify_claim("C3").details
    for gid, hid in d["expected"].items():
        assert hid in d["found"][gid]
    assert all(d["found"][g] for g in d["found"])


def test_superfluous_graph_variants():
    variants = s_minus_edges()
    assert variants
    s = catalog.graph("S")
    for (u, v), h in variants:
        assert h.edge_count == s.edge_count - 1
        assert sorted((s.degree(u), s.degree(v))) == [4, 5]


@pytest.mark.parametrize("cid", SWEEP)
def test_sweep_claims_pass_to_order_seven(cid):
    v = verify_claim(cid, max_n=7 if cid != "C13" else None)
    assert v.passed, v.as_json()
    assert v.checked > 0


def test_transcription_flags():
    flagged = {c for c, claim in CLAIMS.items() if claim.transcription_dependent}
    assert flagged == {"C9", "C10", "C17"}


def _few_edges(f, t):
    t.checked += 1
    if f.graph.edge_count > 3:
        t.violate(f)


REGISTRY["test_few_edges"] = lambda m: Probe("test_few_edges", m, _few_edges)


def test_sweep_counterexamples_are_reproducible():
    t = run_sweep([REGISTRY["test_few_edges"](5)])["test_few_edges"]
    assert t.checked == sum((1, 2, 4, 11, 34))
    assert t.violation_count > 0
    n, g6 = t.violations[0]
    g = parse_graph6(g6)
    assert g.n == n and g.edge_count > 3
    assert t.violations == sorted(t.violations)


def test_parallel_sweep_matches_serial():
    serial = run_sweep([REGISTRY["test_few_edges"](6)], jobs=1)["test_few_edges"]
    parallel = run_sweep([REGISTRY["test_few_edges"](6)], jobs=2)["test_few_edges"]
    assert (serial.checked, serial.violation_count, serial.violations) == (
        parallel.checked, parallel.violation_count, parallel.violations)


def test_tally_merge_keeps_smallest():
    a, b = Tally(1, 1, [(6, "E~~w")]), Tally(2, 1, [(5, "D~{")])
    a.merge(b)
    assert (a.checked, a.violation_count, a.violations[0]) == (3, 2, (5, "D~{"))


def test_census_report_rows():
    r = run_census(6, claims=["C16", "C1"])
    rows = [json.loads(line) for line in r.to_jsonl().splitlines()]
    kinds = [row["kind"] for row in rows]
    assert kinds.count("order") == 6 and "family_A" in kinds and kinds[-1] == "summary"
    by_n = {row["n"]: row for row in rows if row["kind"] == "order"}
    assert sorted(by_n[6]["minimal_imperfect_ids"]) == ["G1", "G2", "G3", "G4"]
    assert all(by_n[n]["count"] == by_n[n]["known_count"] for n in by_n)
    fam = next(row for row in rows if row["kind"] == "family_A")
    assert fam["derived"] and not fam["complete"]
    claims = {row["claim"]: row for row in rows if row["kind"] == "claim"}
    assert claims["C16"]["verdict"] == "pass" and claims["C16"]["max_n"] == 6
    assert "C16" in r.table() and r.passed


def test_family_members_contain_a_forbidden_graph():
    r = run_census(7)
    pats = [catalog.graph(f"G{j}") for j in range(1, 7)]
    for _, g6, _ in r.family_a:
        g = parse_graph6(g6)
        assert any(p.n <= g.n and find_induced_embedding(g, p) for p in pats)


def test_verify_claims_shares_one_sweep():
    verdicts, tallies = verify_claims(["C6", "C7"], max_n=6)
    assert [v.claim for v in verdicts] == ["C6", "C7"]
    assert set(tallies) == {"C6", "C7"}
