"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import time

import networkx as nx
import pytest

from jetgraph.cli import main
from jetgraph.corpus import Corpus, all_connected_graphs, graph_label
from jetgraph.graph import (
    Graph,
    complement,
    is_chordal,
    is_cochordal,
    minimal_vertex_covers,
    parse_graph,
)
from jetgraph.groebner import Limits
from jetgraph.jets import jets_of_graph, jets_of_polynomial
from jetgraph.poly import Ring
from jetgraph.verify import check_dual_oracle, run_suite, summarize

K32 = "x1 x4\nx1 x5\nx2 x4\nx2 x5\nx3 x4\nx3 x5\n"
SUITE_CORPUS = Corpus.parse("family:path:3;cycle:3;star:3;cycle:5;path:4")


def announce(capsys, number: int, title: str, ok: bool, seconds: float, detail: str = ""):
    with capsys.disabled():
        status = "PASS" if ok else "FAIL"
        print(f"\n[{status}] criterion {number:2d}: {title} ({seconds:.2f}s) {detail}".rstrip())


def run_cli(capsys, tmp_path, *argv) -> tuple[int, str]:
    path = tmp_path / "graph.txt"
    path.write_text(K32)
    code = main([*argv, str(path)])
    return code, capsys.readouterr().out


def table_rows(text: str) -> list[list[str]]:
    return [line.split() for line in text.splitlines() if line.strip()]


def two_row_layout(totals: list[int]) -> list[list[str]]:
    """The displayed layout: header, totals, row 0 with a single 1, row 1 with the rest."""
    n = len(totals)
    dots = ["."] * (n - 1)
    return [
        [str(k) for k in range(n)],
        ["total:"] + [str(t) for t in totals],
        ["0:", "1"] + dots,
        ["1:", "."] + [str(t) for t in totals[1:]],
    ]


def check_betti(capsys, tmp_path, number, argv, totals, budget):
    start = time.perf_counter()
    code, out = run_cli(capsys, tmp_path, "betti", *argv)
    seconds = time.perf_counter() - start
    ok = code == 0 and table_rows(out) == two_row_layout(totals) and seconds < budget
    announce(capsys, number, f"betti {' '.join(argv) or 'base'} on K_3,2", ok, seconds)
    assert code == 0
    assert table_rows(out) == two_row_layout(totals)
    assert seconds < budget


def test_criterion_01_betti_base(capsys, tmp_path):
    check_betti(capsys, tmp_path, 1, [], [1, 6, 9, 5, 1], 1.0)


def test_criterion_02_betti_first_jets(capsys, tmp_path):
    totals = [1, 24, 96, 194, 246, 209, 120, 45, 10, 1]
    check_betti(capsys, tmp_path, 2, ["--pc", "-s", "1"], totals, 120.0)


@pytest.mark.slow
def test_criterion_03_betti_second_jets(capsys, tmp_path):
    totals = [1, 54, 351, 1224, 2871, 4920, 6399, 6426, 5004, 3003, 1365, 455, 105, 15, 1]
    check_betti(capsys, tmp_path, 3, ["--pc", "-s", "2"], totals, 1200.0)


def test_criterion_04_jets_substitution(capsys):
    start = time.perf_counter()
    ring = Ring(("x", "y", "z"))
    coeffs = jets_of_polynomial(ring.parse("x^2*y"), 2)
    jets = coeffs[0].ring
    displayed = [
        "(x.0)^2*y.0",
        "2*x.0*y.0*x.1 + (x.0)^2*y.1",
        "(x.0)^2*y.2 + 2*x.0*y.0*x.2 + 2*x.0*x.1*y.1 + y.0*(x.1)^2",
    ]
    expected = [jets.parse(d) for d in displayed]
    ok = coeffs == expected and [str(c) for c in coeffs] == [str(e) for e in expected]
    announce(capsys, 4, "jets of x^2*y for s = 2", ok, time.perf_counter() - start)
    assert coeffs == expected
    assert [str(c) for c in coeffs] == [str(e) for e in expected]


def test_criterion_05_jets_graph_figure(capsys):
    start = time.perf_counter()
    p3 = parse_graph("x y\ny z\n")
    first = {frozenset(e) for e in [
        ("x.0", "y.0"), ("y.0", "z.0"), ("x.0", "y.1"), ("z.0", "y.1"), ("y.0", "x.1"), ("y.0", "z.1"),
    ]}
    second = first | {frozenset(e) for e in [
        ("y.2", "x.0"), ("y.2", "z.0"), ("y.0", "x.2"), ("y.0", "z.2"), ("y.1", "z.1"), ("x.1", "y.1"),
    ]}
    got1 = {frozenset(e) for e in jets_of_graph(p3, 1).edge_names()}
    got2 = {frozenset(e) for e in jets_of_graph(p3, 2).edge_names()}
    ok = got1 == first and got2 == second and len(got1) == 6 and len(got2) == 12
    announce(capsys, 5, "jets graphs of the path on three vertices", ok, time.perf_counter() - start)
    assert got1 == first
    assert got2 == second


def test_criterion_06_vertex_cover_examples(capsys):
    start = time.perf_counter()

    def covers(text):
        return {frozenset(w.names()) for w in minimal_vertex_covers(parse_graph(text))}

    star = covers("v1 v2\nv1 v3\nv1 v4\nv1 v5\n")
    g2 = covers("v1 v3\nv1 v4\nv2 v4\nv2 v5\nv3 v5\n")
    g2_plus = covers("v1 v3\nv1 v4\nv2 v4\nv2 v5\nv3 v5\nv4 v5\n")
    triples = {frozenset(t.split()) for t in ["v1 v2 v3", "v1 v2 v5", "v1 v4 v5", "v2 v3 v4", "v3 v4 v5"]}
    ok = (
        star == {frozenset({"v1"}), frozenset({"v2", "v3", "v4", "v5"})}
        and g2 == triples
        and g2_plus == triples - {frozenset({"v1", "v2", "v3"})}
    )
    announce(capsys, 6, "minimal vertex covers of the worked examples", ok, time.perf_counter() - start)
    assert star == {frozenset({"v1"}), frozenset({"v2", "v3", "v4", "v5"})}
    assert g2 == triples
    assert g2_plus == triples - {frozenset({"v1", "v2", "v3"})}


def run_and_announce(capsys, number, title, suite, corpus, s_values, budget=None):
    start = time.perf_counter()
    reports = run_suite(suite, corpus, s_values)
    seconds = time.perf_counter() - start
    counts = summarize(reports)
    ok = counts["fail"] == 0 and counts["skipped"] == 0 and bool(reports)
    if budget is not None:
        ok = ok and seconds < budget
    detail = f"[{counts['pass']} pass, {counts['fail']} fail, {counts['skipped']} skipped]"
    announce(capsys, number, title, ok, seconds, detail)
    failures = [r.to_structured() for r in reports if r.status != "pass"]
    assert not failures, failures[:3]
    if budget is not None:
        assert seconds < budget
    return reports


def test_criterion_07_vc_colon(capsys):
    reports = run_and_announce(capsys, 7, "vc-colon suite", "vc-colon", SUITE_CORPUS, [0, 1, 2], 300.0)
    assert len(reports) == 15


def test_criterion_08_minimal_primes(capsys):
    reports = run_and_announce(capsys, 8, "minimal-prime suite", "minimal-prime", SUITE_CORPUS, [0, 1, 2])
    assert len(reports) == 15


def test_criterion_09_pc_triple_route(capsys):
    corpus = Corpus.parse("connected:4")
    start = time.perf_counter()
    identity = run_suite("pc-identity", corpus, [1, 2])
    saturation = run_suite("pc-saturation", corpus, [1, 2])
    seconds = time.perf_counter() - start
    bad = [r.to_structured() for r in identity + saturation if r.status != "pass"]
    # the saturation suite only applies when there are at least two covers
    multi = [
        (graph_label(g), s) for _, g in corpus.graphs() for s in (1, 2) if len(minimal_vertex_covers(g)) >= 2
    ]
    ok = not bad and len(saturation) == len(multi) and len(identity) == 2 * sum(1 for _ in corpus.graphs())
    announce(capsys, 9, "PC closed form, intersection and saturation routes", ok, seconds,
             f"[{len(identity)} identity cells, {len(saturation)} saturation cells]")
    assert not bad, bad[:3]
    assert len(saturation) == len(multi)


def test_criterion_10_cochordality(capsys):
    start = time.perf_counter()
    reports = run_suite("cochordal-pc", Corpus.parse("connected:6"), [1, 2])
    bad = [r.to_structured() for r in reports if r.status != "pass"]
    expected_cells = 2 * sum(1 for g in all_connected_graphs(6) if is_cochordal(g))

    p4 = parse_graph("x y\ny z\nz w\n")
    jets_complement = complement(jets_of_graph(p4, 1))
    chordal, cycle = is_chordal(jets_complement)
    found = list(cycle.names(jets_complement)) if cycle else []
    target = ["x.0", "z.1", "y.1", "w.0"]
    rotations = [target[k:] + target[:k] for k in range(4)]
    same_cycle = found in rotations or found[::-1] in rotations
    seconds = time.perf_counter() - start
    ok = not bad and len(reports) == expected_cells and not chordal and same_cycle
    announce(capsys, 10, "PC of cochordal graphs is cochordal; J_1(P_4) is not", ok, seconds,
             f"[{len(reports)} cells, witness {' '.join(found)}]")
    assert not bad, bad[:3]
    assert len(reports) == expected_cells
    assert not chordal
    assert same_cycle


def test_criterion_11_froberg(capsys):
    corpus = Corpus.parse("connected:6")
    reports = run_and_announce(capsys, 11, "linear resolution iff cochordal", "froberg", corpus, [0], 600.0)
    labeled = sum(1 for _ in corpus.graphs())
    classes = sum(1 for g in nx.graph_atlas_g()[1:] if g.number_of_nodes() <= 6 and nx.is_connected(g))
    assert len(reports) == labeled
    assert classes == 1 + 1 + 2 + 6 + 21 + 112


def test_criterion_12_radical_of_jets(capsys):
    run_and_announce(capsys, 12, "radical of jets is the jets graph ideal", "radical-jets",
                     Corpus.parse("connected:5"), [0, 1, 2])


def atlas_classes(max_vertices: int, predicate=lambda g: True) -> list[Graph]:
    """One labeled representative per isomorphism class of connected graphs."""
    out = []
    for h in nx.graph_atlas_g()[1:]:
        n = h.number_of_nodes()
        if n > max_vertices or not nx.is_connected(h):
            continue
        names = tuple(f"x{i + 1}" for i in range(n))
        g = Graph(names, frozenset((min(a, b), max(a, b)) for a, b in h.edges()))
        if predicate(g):
            out.append(g)
    return out


def dual_oracle_cells() -> list[tuple[Graph, int]]:
    cells: dict[tuple, tuple[Graph, int]] = {}

    def add(g, s):
        cells.setdefault((g.vertices, g.edges, s), (g, s))

    for _, g in SUITE_CORPUS.graphs():  # criteria 7 and 8
        for s in (0, 1, 2):
            add(g, s)
    for g in all_connected_graphs(4):  # criterion 9
        for s in (1, 2):
            add(g, s)
    for g in atlas_classes(6, is_cochordal):  # criterion 10
        for s in (1, 2):
            add(g, s)
    for g in atlas_classes(6):  # criterion 11
        add(g, 0)
    for g in atlas_classes(5):  # criterion 12
        for s in (0, 1, 2):
            add(g, s)
    return [c for c in cells.values() if c[0].edges]


@pytest.mark.slow
def test_criterion_13_dual_oracle(capsys):
    start = time.perf_counter()
    limits = Limits()
    failures = []
    cells = dual_oracle_cells()
    for g, s in cells:
        outcome = check_dual_oracle(g, s, limits)
        if not outcome.ok:
            failures.append((graph_label(g), s, outcome.witness))
    seconds = time.perf_counter() - start
    announce(capsys, 13, "monomial and Groebner ideal operations agree", not failures, seconds,
             f"[{len(cells)} cells]")
    assert not failures, failures[:3]
