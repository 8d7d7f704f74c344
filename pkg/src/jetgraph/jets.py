"""Jets of polynomials, ideals, graphs and covers, and principal components.

Jet variables are named ``<base>.<order>``; in the jets ring they are ordered
by base variable first and jet order second.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .graph import Graph, VertexCover, complement, edge_ideal, minimal_vertex_covers
from .groebner import Limits, PolyIdeal, saturate_by_ideal
from .monomial import MonomialIdeal, minimalize, mono_intersect, mono_sum
from .poly import Monomial, Polynomial, Ring, mono_support

SEPARATOR = "."


class NotMinimal(ValueError):
    pass


class SmoothVariety(ValueError):
    pass


@dataclass(frozen=True)
class JetsRing:
    base: Ring
    s: int

    def __post_init__(self):
        if self.s < 0:
            raise ValueError("jet order must be nonnegative")
        for name in self.base.names:
            if SEPARATOR in name:
                raise ValueError(f"base variable {name!r} contains the jets separator")

    @cached_property
    def ring(self) -> Ring:
        return Ring(tuple(jet_name(v, j) for v in self.base.names for j in range(self.s + 1)))

    def index(self, var: int, order: int) -> int:
        if not 0 <= order <= self.s:
            raise ValueError(f"jet order {order} outside [0, {self.s}]")
        return var * (self.s + 1) + order

    def variable(self, var: int, order: int) -> Polynomial:
        return self.ring.gen(self.index(var, order))

    def monomial(self, pairs: Sequence[tuple[int, int]]) -> Monomial:
        m = [0] * self.ring.nvars
        for var, order in pairs:
            m[self.index(var, order)] += 1
        return tuple(m)


def jet_name(base: str, order: int) -> str:
    return f"{base}{SEPARATOR}{order}"


def _graph_ring(g: Graph) -> Ring:
    return Ring(g.vertices)


# --------------------------------------------------------------- polynomials


def _series_mul(a: list[Polynomial], b: list[Polynomial], s: int) -> list[Polynomial]:
    out = []
    for m in range(s + 1):
        acc = a[0].ring.zero()
        for k in range(m + 1):
            if a[k] and b[m - k]:
                acc = acc + a[k] * b[m - k]
        out.append(acc)
    return out


def jets_of_polynomial(f: Polynomial, s: int, jr: JetsRing | None = None) -> list[Polynomial]:
    """Coefficients of t^0..t^s after substituting truncated series for each variable."""
    jr = jr or JetsRing(f.ring, s)
    ring = jr.ring
    series = [[jr.variable(i, j) for j in range(s + 1)] for i in range(f.ring.nvars)]
    total = [ring.zero() for _ in range(s + 1)]
    one = [ring.constant(1)] + [ring.zero()] * s
    powers: dict[tuple[int, int], list[Polynomial]] = {}
    for mono, c in f.terms.items():
        acc = one
        for i, e in enumerate(mono):
            if not e:
                continue
            if (i, e) not in powers:
                p = one
                for _ in range(e):
                    p = _series_mul(p, series[i], s)
                powers[i, e] = p
            acc = _series_mul(acc, powers[i, e], s)
        total = [t + a.scale(c) for t, a in zip(total, acc)]
    return total


def jets_inclusion(f: Polynomial, base: Ring, m: int, s: int) -> Polynomial:
    """The inclusion of the m-jets ring into the s-jets ring (m <= s)."""
    if m > s:
        raise ValueError("inclusion needs m <= s")
    big = JetsRing(base, s)
    mapping = [big.index(i, j) for i in range(base.nvars) for j in range(m + 1)]
    return f.embed(big.ring, mapping)


def jets_of_ideal(i, s: int) -> PolyIdeal:
    """J_s(I): all t-coefficients of all generators (generator-major order)."""
    gens = i.polynomials() if isinstance(i, MonomialIdeal) else list(i.generators)
    jr = JetsRing(i.ring, s)
    out = []
    for g in gens:
        out.extend(jets_of_polynomial(g, s, jr))
    return PolyIdeal(jr.ring, tuple(out))


def jets_of_edge_ideal(g: Graph, s: int) -> PolyIdeal:
    return jets_of_ideal(edge_ideal(g), s)


# -------------------------------------------------------------------- graphs


def _jets_vertices(g: Graph, s: int) -> tuple[str, ...]:
    JetsRing(_graph_ring(g), s)  # validates names
    return tuple(jet_name(v, j) for v in g.vertices for j in range(s + 1))


def jets_of_graph(g: Graph, s: int) -> Graph:
    """Edges {x.i, y.j} for base edges {x, y} with i + j <= s."""
    k = s + 1
    edges = set()
    for x, y in g.edges:
        for i in range(k):
            for j in range(k - i):
                edges.add((x * k + i, y * k + j))
    return Graph(_jets_vertices(g, s), frozenset(edges))


def principal_component_graph(g: Graph, s: int) -> Graph:
    """Edges {x.i, y.j} for base edges {x, y} and all i, j <= s."""
    k = s + 1
    edges = {(x * k + i, y * k + j) for x, y in g.edges for i in range(k) for j in range(k)}
    return Graph(_jets_vertices(g, s), frozenset(edges))


def jets_complement_edges(g: Graph, s: int) -> Graph:
    return complement(jets_of_graph(g, s))


def jets_of_cover(w: VertexCover, s: int) -> VertexCover:
    if not w.minimal:
        raise NotMinimal("jets_of_cover expects a minimal vertex cover")
    jg = jets_of_graph(w.graph, s)
    k = s + 1
    return VertexCover(frozenset(x * k + j for x in w.cover for j in range(k)), jg, True)


def cover_prime(g: Graph, cover, s: int) -> MonomialIdeal:
    """<J_s(W)>: all jet variables of the cover's vertices."""
    jr = JetsRing(_graph_ring(g), s)
    members = cover.cover if isinstance(cover, VertexCover) else cover
    return MonomialIdeal.from_variables(jr.ring, [jr.index(x, j) for x in members for j in range(s + 1)])


def cover_complement_product(g: Graph, cover, s: int) -> Polynomial:
    """Product of the order-0 jet variables of the vertices outside the cover."""
    jr = JetsRing(_graph_ring(g), s)
    members = cover.cover if isinstance(cover, VertexCover) else set(cover)
    outside = [v for v in range(g.n) if v not in members]
    return jr.ring.monomial(jr.monomial([(v, 0) for v in outside]))


# ------------------------------------------------------------ monomial jets


def radical_of_jets(i: MonomialIdeal, s: int) -> MonomialIdeal:
    """sqrt(J_s(I)) for monomial I from the supports of all coefficient terms."""
    jr = JetsRing(i.ring, s)
    supports: list[Monomial] = []
    for g in i.polynomials():
        for coeff in jets_of_polynomial(g, s, jr):
            supports.extend(mono_support(m) for m in coeff.terms)
    return minimalize(jr.ring, supports)


def principal_component_ideal(g: Graph, s: int) -> MonomialIdeal:
    jr = JetsRing(_graph_ring(g), s)
    gens = [
        jr.monomial([(x, i), (y, j)])
        for x, y in g.sorted_edges()
        for i in range(s + 1)
        for j in range(s + 1)
    ]
    return MonomialIdeal.from_monomials(jr.ring, gens)


def pc_as_cover_intersection(g: Graph, s: int) -> MonomialIdeal:
    covers = minimal_vertex_covers(g)
    return mono_intersect(*(cover_prime(g, w, s) for w in covers))


def singular_locus_ideal(g: Graph, s: int) -> MonomialIdeal:
    """Intersection over cover pairs of the sums of their order-0 primes."""
    covers = minimal_vertex_covers(g)
    if len(covers) < 2:
        raise SmoothVariety("a single minimal cover means an irreducible, smooth variety")
    primes = [cover_prime(g, w, 0) for w in covers]
    jr = JetsRing(_graph_ring(g), s)
    to_jets = [jr.index(v, 0) for v in range(g.n)]
    sums = [mono_sum(a, b).embed(jr.ring, to_jets) for a, b in combinations(primes, 2)]
    return mono_intersect(*sums)


def principal_component_via_saturation(g: Graph, s: int, limits: Limits | None = None) -> PolyIdeal:
    """J_s(I(G)) : A^inf where A is the singular-locus ideal in order-0 variables."""
    jets = jets_of_edge_ideal(g, s)
    if len(minimal_vertex_covers(g)) < 2:
        return jets
    sing = singular_locus_ideal(g, s)
    return saturate_by_ideal(jets, sing.polynomials(), limits)
