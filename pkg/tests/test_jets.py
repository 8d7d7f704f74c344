import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jetgraph.corpus import all_connected_graphs
from jetgraph.graph import VertexCover, edge_ideal, minimal_vertex_covers, parse_graph
from jetgraph.groebner import ideal_equal, radical_membership
from jetgraph.jets import (
    JetsRing,
    NotMinimal,
    SmoothVariety,
    cover_prime,
    jets_inclusion,
    jets_of_cover,
    jets_of_edge_ideal,
    jets_of_graph,
    jets_of_ideal,
    jets_of_polynomial,
    pc_as_cover_intersection,
    principal_component_graph,
    principal_component_ideal,
    principal_component_via_saturation,
    radical_of_jets,
    singular_locus_ideal,
)
from jetgraph.monomial import mono_member
from jetgraph.poly import Polynomial, Ring, format_polynomial

R = Ring(("x", "y", "z"))
P3 = parse_graph("x y\ny z\n")


def test_coefficients_of_x2y():
    coeffs = jets_of_polynomial(R.parse("x^2*y"), 2)
    ring = coeffs[0].ring
    assert ring.names == ("x.0", "x.1", "x.2", "y.0", "y.1", "y.2", "z.0", "z.1", "z.2")
    expected = [
        "x.0^2*y.0",
        "2*x.0*y.0*x.1 + x.0^2*y.1",
        "x.0^2*y.2 + 2*x.0*y.0*x.2 + 2*x.0*x.1*y.1 + y.0*x.1^2",
    ]
    assert coeffs == [ring.parse(e) for e in expected]
    assert [format_polynomial(c) for c in coeffs] == [
        "x.0^2*y.0",
        "2*x.0*x.1*y.0 + x.0^2*y.1",
        "x.1^2*y.0 + 2*x.0*x.2*y.0 + 2*x.0*x.1*y.1 + x.0^2*y.2",
    ]


def test_linear_polynomial_jets_are_shifted_copies():
    coeffs = jets_of_polynomial(R.parse("x + 2*y - 1"), 2)
    ring = coeffs[0].ring
    assert coeffs == [ring.parse("x.0 + 2*y.0 - 1"), ring.parse("x.1 + 2*y.1"), ring.parse("x.2 + 2*y.2")]


polys = st.dictionaries(
    st.tuples(*[st.integers(0, 2)] * 3), st.integers(-3, 3), max_size=3
).map(lambda d: Polynomial(R, {m: c for m, c in d.items() if c}))


@settings(max_examples=40, deadline=None)
@given(polys, st.integers(0, 2), st.integers(0, 2))
def test_lower_jets_embed_unchanged(f, m, extra):
    s = m + extra
    low = jets_of_polynomial(f, m)
    high = jets_of_polynomial(f, s)
    for k in range(m + 1):
        assert jets_inclusion(low[k], R, m, s) == high[k]


@settings(max_examples=40, deadline=None)
@given(polys, polys, st.integers(0, 2))
def test_jets_are_additive(f, g, s):
    assert jets_of_polynomial(f + g, s) == [a + b for a, b in zip(jets_of_polynomial(f, s), jets_of_polynomial(g, s))]


def test_jets_graph_figure():
    one = jets_of_graph(P3, 1)
    assert sorted(one.edge_names()) == sorted(
        [("x.0", "y.0"), ("y.0", "z.0"), ("x.0", "y.1"), ("y.1", "z.0"), ("x.1", "y.0"), ("y.0", "z.1")]
    )
    two = jets_of_graph(P3, 2)
    assert len(two.edges) == 12
    assert set(one.edge_names()) < set(two.edge_names())
    extra = set(two.edge_names()) - set(one.edge_names())
    assert extra == {("x.0", "y.2"), ("y.2", "z.0"), ("x.2", "y.0"), ("y.0", "z.2"), ("y.1", "z.1"), ("x.1", "y.1")}


def test_separator_rejected_in_base_names():
    with pytest.raises(ValueError):
        JetsRing(Ring(("a.1", "b")), 1)


def test_jets_of_cover_requires_minimal():
    w = VertexCover(frozenset({0, 1, 2}), P3, minimal=False)
    with pytest.raises(NotMinimal):
        jets_of_cover(w, 1)
    w = minimal_vertex_covers(P3)[0]
    assert sorted(jets_of_cover(w, 2).names()) == ["y.0", "y.1", "y.2"]


def test_radical_of_jets_against_groebner_route():
    for g in [P3, parse_graph("x y\ny z\nx z\n")]:
        for s in (1, 2):
            jets = jets_of_edge_ideal(g, s)
            rad = radical_of_jets(edge_ideal(g), s)
            for f in jets.generators:
                assert mono_member(f, rad)
            for p in rad.polynomials():
                assert radical_membership(p, jets)


def test_radical_of_jets_is_jets_graph_ideal():
    for g in all_connected_graphs(4):
        for s in range(3):
            assert radical_of_jets(edge_ideal(g), s).generators == edge_ideal(jets_of_graph(g, s)).generators


def test_principal_component_routes():
    for g in all_connected_graphs(4):
        for s in (1, 2):
            pc = principal_component_ideal(g, s)
            assert pc.generators == pc_as_cover_intersection(g, s).generators
            assert pc.generators == edge_ideal(principal_component_graph(g, s)).generators
            assert len(pc.generators) == len(g.edges) * (s + 1) ** 2


def test_single_edge_principal_component():
    g = parse_graph("x y\n")
    assert [str(p) for p in principal_component_ideal(g, 1).polynomials()] == [
        "x.0*y.0", "x.1*y.0", "x.0*y.1", "x.1*y.1"
    ]


def test_singular_locus_of_path():
    # covers {x, y} and {z} of the path x - z - y meet in the origin
    g = parse_graph("x z\ny z\n")
    sing = singular_locus_ideal(g, 1)
    assert sorted(str(p) for p in sing.polynomials()) == ["x.0", "y.0", "z.0"]
    with pytest.raises(SmoothVariety):
        singular_locus_ideal(parse_graph("x\ny\n"), 1)
    assert sorted(str(p) for p in singular_locus_ideal(parse_graph("x y\n"), 0).polynomials()) == ["x.0", "y.0"]


def test_saturation_route_on_path():
    for s in (1, 2):
        sat = principal_component_via_saturation(P3, s)
        assert ideal_equal(sat, principal_component_ideal(P3, s).to_poly_ideal())


def test_cover_prime_is_component_of_jets():
    g = parse_graph("x y\n")
    jets = jets_of_ideal(edge_ideal(g), 1)
    primes = [cover_prime(g, w, 1) for w in minimal_vertex_covers(g)]
    assert sorted(str(p) for p in primes) == ["<x.0, x.1>", "<y.0, y.1>"]
    for p in primes:
        assert all(mono_member(f, p) for f in jets.generators)
