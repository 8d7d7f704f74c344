"""Verification suites: one check per (graph, jet order) cell."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .betti import has_linear_resolution
from .corpus import Corpus
from .graph import (
    Graph,
    CapExceeded,
    complement,
    edge_ideal,
    is_chordal,
    is_chordless_cycle,
    is_cochordal,
    is_vertex_cover,
    minimal_vertex_covers,
    parse_graph,
)
from .groebner import (
    Limits,
    ResourceLimit,
    colon,
    ideal_equal,
    intersect,
    radical_membership,
    saturate,
)
from .jets import (
    cover_complement_product,
    cover_prime,
    jets_of_cover,
    jets_of_edge_ideal,
    jets_of_graph,
    pc_as_cover_intersection,
    principal_component_graph,
    principal_component_ideal,
    principal_component_via_saturation,
    radical_of_jets,
    singular_locus_ideal,
)
from .monomial import MonomialIdeal, minimal_primes, mono_colon_saturate, mono_intersect


class UnknownSuite(KeyError):
    pass


@dataclass
class VerificationReport:
    suite: str
    instance: dict
    status: str  # "pass" | "fail" | "skipped"
    witness: dict | None = None
    detail: str = ""
    seconds: float = 0.0

    def __post_init__(self):
        if self.status == "fail" and not self.witness:
            raise ValueError("a failing report must carry a witness")

    def to_structured(self) -> dict:
        return {
            "suite": self.suite,
            "instance": self.instance,
            "status": self.status,
            "witness": self.witness,
            "detail": self.detail,
        }


@dataclass
class Outcome:
    ok: bool
    witness: dict = field(default_factory=dict)
    detail: str = ""


def _gens(ideal) -> list[str]:
    if isinstance(ideal, MonomialIdeal):
        return [str(p) for p in ideal.polynomials()]
    return [str(p) for p in ideal.generators]


# -------------------------------------------------------------------- checks


def check_cor135(g: Graph, s: int, limits: Limits) -> Outcome:
    """I(G) is the intersection of the primes of its minimal covers."""
    covers = minimal_vertex_covers(g)
    ring_ideal = edge_ideal(g)
    primes = [MonomialIdeal.from_variables(ring_ideal.ring, w.cover) for w in covers]
    meet = mono_intersect(*primes)
    if meet.generators != ring_ideal.generators:
        return Outcome(False, {"expected": _gens(ring_ideal), "got": _gens(meet)})
    return Outcome(True)


def check_vc_colon(g: Graph, s: int, limits: Limits) -> Outcome:
    """<J_s(W)> = J_s(I(G)) : f^inf for every minimal cover W."""
    jets = jets_of_edge_ideal(g, s)
    for w in minimal_vertex_covers(g):
        f = cover_complement_product(g, w, s)
        sat = saturate(jets, f, limits)
        prime = cover_prime(g, w, s)
        if not ideal_equal(sat, prime.to_poly_ideal(), limits):
            return Outcome(False, {"cover": w.names(), "expected": _gens(prime), "got": _gens(sat)})
    return Outcome(True, detail=_full_cover_status(g, s, jets, limits))


def _full_cover_status(g: Graph, s: int, jets, limits: Limits) -> str:
    """Reported, not asserted: the identity for the non-minimal cover W = V(G)."""
    if not g.edges:  # otherwise V(G) is never a minimal cover
        return ""
    whole = cover_prime(g, range(g.n), s)
    holds = ideal_equal(jets, whole.to_poly_ideal(), limits)
    return "full vertex set: identity " + ("holds" if holds else "fails")


def check_minimal_prime(g: Graph, s: int, limits: Limits) -> Outcome:
    """<J_s(W)> is a minimal prime of sqrt(J_s(I(G)))."""
    primes = minimal_primes(radical_of_jets(edge_ideal(g), s))
    for w in minimal_vertex_covers(g):
        p = cover_prime(g, w, s)
        if not any(p.generators == q.generators for q in primes):
            return Outcome(False, {"cover": w.names(), "prime": _gens(p)})
    return Outcome(True)


def check_pc_identity(g: Graph, s: int, limits: Limits) -> Outcome:
    """Closed-form PC ideal = intersection of jets-of-cover primes = edge ideal of PC graph."""
    closed = principal_component_ideal(g, s)
    meet = pc_as_cover_intersection(g, s)
    graph_ideal = edge_ideal(principal_component_graph(g, s))
    if closed.generators != meet.generators:
        return Outcome(False, {"closed_form": _gens(closed), "intersection": _gens(meet)})
    if [str(p) for p in graph_ideal.polynomials()] != _gens(closed):
        return Outcome(False, {"closed_form": _gens(closed), "pc_graph": _gens(graph_ideal)})
    expected = len(g.edges) * (s + 1) ** 2
    if len(closed.generators) != expected:
        return Outcome(False, {"closed_form": _gens(closed)}, f"expected {expected} generators")
    return Outcome(True)


def check_pc_saturation(g: Graph, s: int, limits: Limits) -> Outcome:
    """The saturation route and the closed form have the same radical."""
    closed = principal_component_ideal(g, s)
    sat = principal_component_via_saturation(g, s, limits)
    closed_poly = closed.to_poly_ideal()
    for p in closed.polynomials():
        if not radical_membership(p, sat, limits):
            return Outcome(False, {"missing_from_radical_of_saturation": str(p), "saturation": _gens(sat)})
    for p in sat.generators:
        if not radical_membership(p, closed_poly, limits):
            return Outcome(False, {"missing_from_pc": str(p), "saturation": _gens(sat)})
    exact = ideal_equal(sat, closed_poly, limits)
    return Outcome(True, detail="equal" if exact else "radical-equal")


def check_cochordal_pc(g: Graph, s: int, limits: Limits) -> Outcome:
    pc = principal_component_graph(g, s)
    ok, cycle = is_chordal(complement(pc))
    if not ok:
        return Outcome(False, {"cycle": cycle.names(pc), "pc_graph": pc.to_structured()})
    return Outcome(True)


def check_froberg(g: Graph, s: int, limits: Limits) -> Outcome:
    """s = 0: linear resolution iff cochordal; s >= 1: PC_s of a cochordal graph is linear."""
    if s == 0:
        linear = has_linear_resolution(edge_ideal(g))
        cochordal = is_cochordal(g)
        if linear != cochordal:
            return Outcome(False, {"linear": linear, "cochordal": cochordal})
        return Outcome(True)
    pc = principal_component_ideal(g, s)
    if not has_linear_resolution(pc):
        return Outcome(False, {"pc_ideal": _gens(pc)}, "PC ideal lacks a linear resolution")
    if not is_cochordal(principal_component_graph(g, s)):
        return Outcome(False, {"pc_ideal": _gens(pc)}, "PC graph is not cochordal")
    return Outcome(True)


def _is_minimal_cover(g: Graph, cover: Iterable[int]) -> bool:
    cover = set(cover)
    if not is_vertex_cover(g, cover):
        return False
    return all(not is_vertex_cover(g, cover - {v}) for v in cover)


def check_ghw_cover(g: Graph, s: int, limits: Limits) -> Outcome:
    """Jets of a minimal cover are a minimal cover of the jets graph."""
    jg = jets_of_graph(g, s)
    for w in minimal_vertex_covers(g):
        jw = jets_of_cover(w, s)
        if not _is_minimal_cover(jg, jw.cover):
            return Outcome(False, {"cover": w.names(), "jets_cover": jw.names()})
    return Outcome(True)


def check_radical_jets(g: Graph, s: int, limits: Limits) -> Outcome:
    rad = radical_of_jets(edge_ideal(g), s)
    graph_ideal = edge_ideal(jets_of_graph(g, s))
    if _gens(rad) != _gens(graph_ideal):
        return Outcome(False, {"radical": _gens(rad), "jets_graph_ideal": _gens(graph_ideal)})
    return Outcome(True)


def monomial_pool(g: Graph, s: int) -> list[MonomialIdeal]:
    """Monomial ideals in the s-jets ring that the other suites generate for (g, s)."""
    pool = [principal_component_ideal(g, s), radical_of_jets(edge_ideal(g), s)]
    pool += [cover_prime(g, w, s) for w in minimal_vertex_covers(g)]
    if len(minimal_vertex_covers(g)) >= 2:
        pool.append(singular_locus_ideal(g, s))
    return pool


def dual_oracle_cases(g: Graph, s: int):
    """(ideal, other ideal, monomial) triples compared by both ideal engines."""
    pool = monomial_pool(g, s)
    ring = pool[0].ring
    covers = minimal_vertex_covers(g)
    elements = [cover_complement_product(g, w, s).monomials()[0] for w in covers[:2]]
    if ring.nvars:
        elements.append(ring.var_monomial(0))
    elements = [m for m in elements if any(m)]
    for k, ideal in enumerate(pool):
        other = pool[(k + 1) % len(pool)]
        yield ideal, other, elements


def check_dual_oracle(g: Graph, s: int, limits: Limits) -> Outcome:
    """Closed-form monomial intersect/colon/saturate match the Groebner routines."""
    for ideal, other, elements in dual_oracle_cases(g, s):
        as_poly = ideal.to_poly_ideal()
        expect = mono_intersect(ideal, other)
        got = intersect(as_poly, other.to_poly_ideal(), limits)
        if not ideal_equal(got, expect.to_poly_ideal(), limits):
            return Outcome(False, {"op": "intersect", "ideal": _gens(ideal), "other": _gens(other)})
        for m in elements:
            f = ideal.ring.monomial(m)
            for sat in (False, True):
                expect = mono_colon_saturate(ideal, m, sat)
                got = (saturate if sat else colon)(as_poly, f, limits)
                if not ideal_equal(got, expect.to_poly_ideal(), limits):
                    op = "saturate" if sat else "colon"
                    return Outcome(False, {"op": op, "ideal": _gens(ideal), "by": str(f)})
    return Outcome(True)


def _always(g: Graph, s: int) -> bool:
    return True


def _has_edges(g: Graph, s: int) -> bool:
    return bool(g.edges)


def _two_covers(g: Graph, s: int) -> bool:
    return len(minimal_vertex_covers(g)) >= 2


def _cochordal(g: Graph, s: int) -> bool:
    return is_cochordal(g)


def _froberg_pre(g: Graph, s: int) -> bool:
    return s == 0 or is_cochordal(g)


SUITES: dict[str, tuple[Callable, Callable]] = {
    "cor135": (check_cor135, _always),
    "vc-colon": (check_vc_colon, _always),
    "minimal-prime": (check_minimal_prime, _always),
    "pc-identity": (check_pc_identity, _always),
    "pc-saturation": (check_pc_saturation, _two_covers),
    "cochordal-pc": (check_cochordal_pc, _cochordal),
    "froberg": (check_froberg, _froberg_pre),
    "ghw-cover": (check_ghw_cover, _always),
    "radical-jets": (check_radical_jets, _always),
    "dual-oracle": (check_dual_oracle, _has_edges),
}


def run_cell(suite: str, label: str, g: Graph, s: int, limits: Limits) -> VerificationReport:
    check, _ = SUITES[suite]
    instance = {"label": label, "graph": g.to_structured(), "s": s}
    start = time.perf_counter()
    try:
        outcome = check(g, s, limits)
    except (ResourceLimit, CapExceeded) as exc:
        return VerificationReport(suite, instance, "skipped", None, str(exc), time.perf_counter() - start)
    status = "pass" if outcome.ok else "fail"
    witness = None
    if not outcome.ok:
        witness = {"graph": g.to_structured(), "s": s, **outcome.witness}
    return VerificationReport(suite, instance, status, witness, outcome.detail, time.perf_counter() - start)


def _run_cell_args(args):
    return run_cell(*args)


def run_suite(name: str, corpus: Corpus, s_values: Iterable[int], limits: Limits | None = None,
              workers: int = 1) -> list[VerificationReport]:
    if name not in SUITES:
        raise UnknownSuite(name)
    limits = limits or Limits()
    _, pre = SUITES[name]
    s_values = list(s_values)
    cells = [
        (name, label, g, s, limits)
        for label, g in corpus.graphs()
        for s in s_values
        if pre(g, s)
    ]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            reports = list(pool.map(_run_cell_args, cells, chunksize=16))
    else:
        reports = [run_cell(*c) for c in cells]
    reports.sort(key=lambda r: (r.instance["label"], r.instance["s"]))
    return reports


def recheck(report: VerificationReport, limits: Limits | None = None) -> bool:
    """True iff the failure is reproduced from the witness alone."""
    if report.witness is None:
        return False
    g = parse_graph(json.dumps(report.witness["graph"]))
    s = report.witness["s"]
    if report.suite == "cochordal-pc" and "cycle" in report.witness:
        pc = principal_component_graph(g, s)
        comp = complement(pc)
        path = [comp.index[v] for v in report.witness["cycle"]]
        return len(path) >= 4 and is_chordless_cycle(comp, path)
    return not SUITES[report.suite][0](g, s, limits or Limits()).ok


def summarize(reports: list[VerificationReport]) -> dict[str, int]:
    out = {"pass": 0, "fail": 0, "skipped": 0}
    for r in reports:
        out[r.status] += 1
    return out


def exit_code(reports: list[VerificationReport]) -> int:
    counts = summarize(reports)
    if counts["fail"]:
        return 1
    if counts["skipped"]:
        return 3
    return 0
