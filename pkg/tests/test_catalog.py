import pytest

from domperfect import catalog
from domperfect.catalog import (
    Ambiguous,
    CatalogError,
    Expected,
    ZeroValid,
    load_catalog,
    parse_catalog,
    resolve_transcription,
    validate_all,
)
from domperfect.catalog.transcribe import candidates, load_picture
from domperfect.invariants import is_chordal, is_planar
from domperfect.iso import canonical_form, find_induced_embedding
from domperfect.perfection import is_minimal_imperfect

G_IDS = [f"G{j}" for j in range(1, 18)]
G_EXPECT = Expected(gamma=2, i=3, minimal_imperfect=True)


def test_load_catalog_ids_and_orders():
    entries = load_catalog()
    ids = [e.id for e in entries]
    assert len(ids) == len(set(ids))
    for pid in G_IDS + [f"H{k}" for k in range(10)] + ["U1", "U2", "S", "T1", "T2"]:
        assert pid in ids
    orders = tuple(catalog.get(pid).order for pid in G_IDS)
    assert orders == (6, 6, 6, 6, 7, 7, 8, 8, 8, 8, 8, 8, 8, 9, 9, 9, 11)
    assert catalog.get("H5").expected.i == 2


def test_validate_all_passes():
    report = validate_all()
    assert report.passed, report.failures()
    assert all(c.passed for c in report.for_entry("G17"))


def test_validation_failures_are_rows_not_exceptions():
    bad = parse_catalog("X 3 0-1,1-2\nexpect gamma=2 i=1\n")
    report = validate_all(bad)
    assert not report.passed
    assert {c.expectation for c in report.failures()} == {"gamma"}


def test_forbidden_graphs_form_an_antichain():
    graphs = {pid: catalog.graph(pid) for pid in G_IDS}
    assert len({canonical_form(g) for g in graphs.values()}) == 17
    for a in G_IDS:
        for b in G_IDS:
            if a != b and graphs[b].n <= graphs[a].n:
                assert find_induced_embedding(graphs[a], graphs[b]) is None, (a, b)


def test_structural_consequences():
    assert is_chordal(catalog.graph("G1"))
    for pid in G_IDS[1:]:
        assert not is_chordal(catalog.graph(pid)), pid
    for pid in G_IDS[13:]:
        assert not is_planar(catalog.graph(pid)), pid


def test_forbidden_pattern_order():
    assert [pid for pid, _ in catalog.forbidden_patterns()] == G_IDS
    assert catalog.pattern_order(["G17", "H5", "G1"]) == ["G1", "H5", "G17"]


@pytest.mark.parametrize(
    "text",
    [
        "A 2 0-1\nA 2 0-1\n",
        "A 2 0-2\n",
        "A 2 0-0\n",
        "A x 0-1\n",
        "A 2 0-1,1-0\n",
        "A 2 0+1\n",
        "expect gamma=1\n",
        "A 2 0-1\nexpect colour=red\n",
        "A 2 0-1\nexpect perfect=maybe\n",
    ],
)
def test_parse_catalog_rejects(text):
    with pytest.raises(CatalogError):
        parse_catalog(text)


def test_parse_catalog_reads_records():
    (e,) = parse_catalog("# c\nK 3 0-1,1-2\nexpect gamma=1 must_contain=K,K\nnote first\nnote second\n")
    assert e.order == 3 and e.edges == ((0, 1), (1, 2))
    assert e.expected.gamma == 1 and e.expected.must_contain == ("K", "K")
    assert e.provenance == "first second"
    assert e.as_json()["graph6"] == "Bg"


def test_picture_panels():
    panels = load_picture()
    assert sorted(panels, key=lambda k: int(k[1:])) == G_IDS
    assert [panels[pid].order for pid in G_IDS] == [catalog.get(pid).order for pid in G_IDS]


def test_every_panel_has_one_valid_reading():
    panels = load_picture()
    peers = []
    for pid in G_IDS:
        cands = candidates(panels[pid])
        edges = resolve_transcription([c.edges for c in cands], panels[pid].order, G_EXPECT, peers=peers)
        assert tuple(sorted(edges)) == catalog.get(pid).edges
        peers.append(catalog.graph(pid))


def test_resolve_transcription_errors():
    g5 = catalog.get("G5")
    dropped = [g5.edges[:k] + g5.edges[k + 1:] for k in range(len(g5.edges))]
    with pytest.raises(ZeroValid):
        resolve_transcription(dropped, g5.order, G_EXPECT)
    g1, g2 = catalog.get("G1"), catalog.get("G2")
    with pytest.raises(Ambiguous):
        resolve_transcription([g1.edges, g2.edges], 6, G_EXPECT)
    with pytest.raises(ValueError):
        resolve_transcription([], 6, G_EXPECT)
    # isomorphic duplicates count once; peers exclude a candidate
    assert resolve_transcription([g1.edges, g1.edges], 6, G_EXPECT) == g1.edges
    assert resolve_transcription([g1.edges, g2.edges], 6, G_EXPECT, peers=[g1.graph]) == g2.edges


def test_curved_strokes_adjudicate_uniquely():
    panels = load_picture()
    for pid in ("G16", "G17"):
        panel = panels[pid]
        passing = {
            canonical_form(c_graph)
            for c in candidates(panel)
            if is_minimal_imperfect(c_graph := catalog._graph(panel.order, tuple(sorted(c.edges))))
        }
        assert len(passing) <= 1
