import pytest

from jetgraph.corpus import Corpus, all_connected_graphs, family_graph
from jetgraph.graph import parse_graph
from jetgraph.groebner import Limits
from jetgraph.verify import (
    SUITES,
    Outcome,
    UnknownSuite,
    VerificationReport,
    exit_code,
    recheck,
    run_cell,
    run_suite,
    summarize,
)

SMALL = Corpus.parse("family:path:3;cycle:3;star:3")


def test_connected_graph_counts():
    # labeled connected graphs on exactly k vertices: 1, 1, 4, 38, 728
    assert sum(1 for _ in all_connected_graphs(5)) == 1 + 1 + 4 + 38 + 728


def test_corpus_strings():
    assert [label for label, _ in SMALL.graphs()] == ["path:3", "cycle:3", "star:3"]
    assert len(family_graph("kbip:3,2").edges) == 6
    a = [label for label, _ in Corpus.parse("random:5:4", seed=7).graphs()]
    b = [label for label, _ in Corpus.parse("random:5:4", seed=7).graphs()]
    assert a == b and len(a) == 4
    with pytest.raises(ValueError):
        Corpus.parse("nonsense:3")


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_every_suite_passes_on_small_corpus(suite):
    reports = run_suite(suite, SMALL, [0, 1])
    assert reports and summarize(reports)["fail"] == 0
    assert exit_code(reports) == 0


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope", SMALL, [0])


def test_fail_needs_witness():
    with pytest.raises(ValueError):
        VerificationReport("x", {}, "fail")


def test_resource_limit_is_skipped():
    g = family_graph("cycle:5")
    report = run_cell("vc-colon", "c5", g, 2, Limits(max_basis=3))
    assert report.status == "skipped"
    assert exit_code([report]) == 3


def test_failure_report_is_reproducible(monkeypatch):
    def broken(g, s, limits):
        return Outcome(False, {"note": "always"})

    monkeypatch.setitem(SUITES, "cor135", (broken, SUITES["cor135"][1]))
    report = run_cell("cor135", "p3", parse_graph("x y\ny z\n"), 1, Limits())
    assert report.status == "fail" and report.witness["s"] == 1
    assert recheck(report)
    assert exit_code([report]) == 1


def test_workers_give_same_reports():
    one = run_suite("pc-identity", SMALL, [1, 2], workers=1)
    two = run_suite("pc-identity", SMALL, [1, 2], workers=2)
    assert [r.to_structured() for r in one] == [r.to_structured() for r in two]


def test_cor135_on_all_connected_graphs_up_to_six():
    reports = run_suite("cor135", Corpus.parse("connected:6"), [0])
    assert len(reports) == 27476
    assert summarize(reports) == {"pass": 27476, "fail": 0, "skipped": 0}


def test_vc_colon_reports_full_vertex_set():
    reports = run_suite("vc-colon", Corpus.parse("family:path:3"), [1])
    assert reports[0].status == "pass"
    assert reports[0].detail == "full vertex set: identity fails"
