"""Buchberger's algorithm and the ideal operations built on it."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import (
    Monomial,
    MonomialOrder,
    Polynomial,
    Ring,
    RingMismatch,
    block_order,
    divide_exact_poly,
    format_polynomial,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


class ResourceLimit(RuntimeError):
    pass


@dataclass(frozen=True)
class Limits:
    max_basis: int = 20_000
    max_degree: int = 40
    max_pairs: int = 500_000

    @classmethod
    def from_mapping(cls, data: dict) -> Limits:
        known = {k: int(v) for k, v in data.items() if k in cls.__dataclass_fields__}
        return cls(**known)


DEFAULT_LIMITS = Limits()


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    elements: tuple[Polynomial, ...]

    @property
    def ring(self) -> Ring:
        return self.elements[0].ring

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant() and bool(self.elements[0])

    def leading_monomials(self) -> list[Monomial]:
        return [p.leading_monomial(self.order) for p in self.elements]


@dataclass(frozen=True)
class PolyIdeal:
    ring: Ring
    generators: tuple[Polynomial, ...]
    _bases: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        gens = tuple(g for g in self.generators if g)
        for g in gens:
            if g.ring.names != self.ring.names:
                raise RingMismatch("generator outside the ideal's ring")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, gens: Sequence[Polynomial], ring: Ring | None = None) -> PolyIdeal:
        gens = list(gens)
        if ring is None:
            if not gens:
                raise ValueError("cannot infer the ring of an empty generator list")
            ring = gens[0].ring
        return cls(ring, tuple(gens))

    def basis(self, order: MonomialOrder | None = None, limits: Limits | None = None) -> GroebnerBasis:
        order = order or self.ring.order
        if order not in self._bases:
            self._bases[order] = buchberger(self, order, limits)
        return self._bases[order]

    def contains(self, f: Polynomial, limits: Limits | None = None) -> bool:
        return not normal_form(f, self.basis(limits=limits))

    def contains_ideal(self, other: PolyIdeal, limits: Limits | None = None) -> bool:
        gb = self.basis(limits=limits)
        return all(not normal_form(g, gb) for g in other.generators)

    def is_unit(self, limits: Limits | None = None) -> bool:
        return self.basis(limits=limits).is_unit()

    def __str__(self):
        return "<" + ", ".join(map(str, self.generators)) + ">"


# ------------------------------------------------------------ core routines


def _support_mask(m: Monomial) -> int:
    mask = 0
    for i, e in enumerate(m):
        if e:
            mask |= 1 << i
    return mask


class _Reducer:
    """Division by a list of monic polynomials with precomputed leading data."""

    def __init__(self, key):
        self.key = key
        self.items: list[tuple[Monomial, int, dict]] = []

    def add(self, lm: Monomial, poly: dict):
        self.items.append((lm, _support_mask(lm), poly))

    def find(self, m: Monomial):
        mask = _support_mask(m)
        for lm, lmask, poly in self.items:
            if lmask & ~mask == 0 and mono_divides(lm, m):
                return lm, poly
        return None

    def reduce(self, f: dict, full: bool = True) -> dict:
        key = self.key
        f = dict(f)
        rem = {}
        while f:
            m = max(f, key=key)
            c = f.pop(m)
            hit = self.find(m)
            if hit is None:
                rem[m] = c
                if not full:
                    rem.update(f)
                    return rem
                continue
            lm, g = hit
            q = mono_div(m, lm)
            for gm, gc in g.items():
                if gm == lm:
                    continue
                t = mono_mul(gm, q)
                v = f.get(t, 0) - c * gc
                if v:
                    f[t] = v
                else:
                    f.pop(t, None)
        return rem


def _monic(f: dict, key) -> tuple[Monomial, dict]:
    lm = max(f, key=key)
    lc = f[lm]
    if lc != 1:
        inv = 1 / lc
        f = {m: c * inv for m, c in f.items()}
    return lm, f


def _spoly(f: dict, lf: Monomial, g: dict, lg: Monomial) -> dict:
    lcm = mono_lcm(lf, lg)
    qf, qg = mono_div(lcm, lf), mono_div(lcm, lg)
    out = {mono_mul(m, qf): c for m, c in f.items() if m != lf}
    for m, c in g.items():
        if m == lg:
            continue
        t = mono_mul(m, qg)
        v = out.get(t, 0) - c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def buchberger(ideal: PolyIdeal, order: MonomialOrder | None = None,
               limits: Limits | None = None) -> GroebnerBasis:
    """Reduced Groebner basis (normal selection, Gebauer-Moeller criteria)."""
    limits = limits or DEFAULT_LIMITS
    order = order or ideal.ring.order
    ring = ideal.ring.with_order(order)
    key = order.key

    inputs = [dict(g.terms) for g in ideal.generators if g]
    inputs.sort(key=lambda f: sorted((key(m), c) for m, c in f.items()), reverse=True)

    polys: list[dict] = []  # every basis polynomial ever added, monic
    lms: list[Monomial] = []
    active: list[int] = []
    pairs: dict[int, tuple[int, int, Monomial]] = {}  # live pairs by id
    pair_ids: list[int] = []
    queue: list = []  # (degree, order key, i, j, id); dead ids are skipped

    def update(h: int):
        nonlocal active
        lh = lms[h]
        cand = [(g, mono_lcm(lh, lms[g])) for g in active]
        kept = []
        for idx, (g, lcm) in enumerate(cand):
            if mono_coprime(lh, lms[g]):
                kept.append((g, lcm))
                continue
            dominated = any(
                mono_divides(other, lcm)
                for jdx, (_, other) in enumerate(cand)
                if jdx > idx
            ) or any(mono_divides(other, lcm) for _, other in kept)
            if not dominated:
                kept.append((g, lcm))
        for pid, (a, b, lcm) in list(pairs.items()):
            if mono_divides(lh, lcm) and mono_lcm(lms[a], lh) != lcm and mono_lcm(lh, lms[b]) != lcm:
                del pairs[pid]
        for g, lcm in kept:
            if not mono_coprime(lh, lms[g]):
                pid = len(pair_ids)
                pair_ids.append(pid)
                pairs[pid] = (g, h, lcm)
                heapq.heappush(queue, (sum(lcm), key(lcm), g, h, pid))
        active = [g for g in active if not mono_divides(lh, lms[g])] + [h]
        if len(pairs) > limits.max_pairs:
            raise ResourceLimit(f"pair queue exceeded {limits.max_pairs}")

    def add(f: dict):
        lm, f = _monic(f, key)
        polys.append(f)
        lms.append(lm)
        if len(polys) > limits.max_basis:
            raise ResourceLimit(f"basis size exceeded {limits.max_basis}")
        update(len(polys) - 1)

    def reducer() -> _Reducer:
        r = _Reducer(key)
        for g in active:
            r.add(lms[g], polys[g])
        return r

    for f in inputs:
        h = reducer().reduce(f, full=False)
        if h:
            add(h)

    while queue:
        pid = heapq.heappop(queue)[-1]
        if pid not in pairs:
            continue
        a, b, lcm = pairs.pop(pid)
        if sum(lcm) > limits.max_degree:
            raise ResourceLimit(f"S-pair degree {sum(lcm)} exceeds {limits.max_degree}")
        s = _spoly(polys[a], lms[a], polys[b], lms[b])
        if not s:
            continue
        h = reducer().reduce(s, full=False)
        if h:
            add(h)

    # interreduce the active leading set into the reduced basis
    final = []
    for g in active:
        r = _Reducer(key)
        for o in active:
            if o != g:
                r.add(lms[o], polys[o])
        tail = {m: c for m, c in polys[g].items() if m != lms[g]}
        reduced = r.reduce(tail, full=True)
        reduced[lms[g]] = Fraction(1)
        final.append(Polynomial._raw(ring, reduced))
    final.sort(key=lambda p: key(p.leading_monomial(order)), reverse=True)
    if not final:
        final = []
    return GroebnerBasis(order, tuple(final))


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    if gb.elements and f.ring.names != gb.elements[0].ring.names:
        raise RingMismatch("polynomial and basis live in different rings")
    key = gb.order.key
    r = _Reducer(key)
    for g in gb.elements:
        r.add(g.leading_monomial(gb.order), g.terms)
    return Polynomial._raw(f.ring, r.reduce(f.terms, full=True))


def is_groebner_basis(gb: GroebnerBasis) -> bool:
    """Every S-polynomial of the elements reduces to zero."""
    elems = gb.elements
    lms = [g.leading_monomial(gb.order) for g in elems]
    for a in range(len(elems)):
        for b in range(a + 1, len(elems)):
            s = _spoly(elems[a].monic(gb.order).terms, lms[a], elems[b].monic(gb.order).terms, lms[b])
            if s and normal_form(Polynomial._raw(elems[a].ring, s), gb):
                return False
    return True


def is_reduced(gb: GroebnerBasis) -> bool:
    lms = [g.leading_monomial(gb.order) for g in gb.elements]
    for g, lm in zip(gb.elements, lms):
        if g.terms[lm] != 1:
            return False
        for other in lms:
            if other is lm:
                continue
            if any(mono_divides(other, m) for m in g.terms):
                return False
    return True


# --------------------------------------------------------- ideal operations


def _same_ring(i: PolyIdeal, j: PolyIdeal):
    if i.ring.names != j.ring.names:
        raise RingMismatch("ideals live in different rings")


def _fresh_name(ring: Ring, stem: str = "t") -> str:
    name = stem
    while name in ring.index:
        name += "_"
    return name


def _extend(ring: Ring) -> Ring:
    """Prepend one auxiliary variable forming an elimination block."""
    return Ring((_fresh_name(ring),) + ring.names, block_order(1))


def _lift(f: Polynomial, ext: Ring) -> Polynomial:
    return f.embed(ext, range(1, ext.nvars))


def ideal_equal(i: PolyIdeal, j: PolyIdeal, limits: Limits | None = None) -> bool:
    _same_ring(i, j)
    return i.contains_ideal(j, limits) and j.contains_ideal(i, limits)


def eliminate(i: PolyIdeal, k: int, limits: Limits | None = None) -> PolyIdeal:
    """Generators of i intersected with the subring free of the first k variables."""
    sub = Ring(i.ring.names[k:], i.ring.order if i.ring.order.kind != "block" else MonomialOrder())
    if k == 0:
        gb = i.basis(limits=limits)
        return PolyIdeal(sub, tuple(g.embed(sub, range(i.ring.nvars)) for g in gb.elements))
    gb = buchberger(i, block_order(k), limits)
    keep = [g for g in gb.elements if all(not any(m[:k]) for m in g.terms)]
    return PolyIdeal(sub, tuple(Polynomial._raw(sub, {m[k:]: c for m, c in g.terms.items()}) for g in keep))


def intersect(i: PolyIdeal, j: PolyIdeal, limits: Limits | None = None) -> PolyIdeal:
    _same_ring(i, j)
    ext = _extend(i.ring)
    t = ext.gen(0)
    gens = [t * _lift(f, ext) for f in i.generators]
    gens += [(1 - t) * _lift(g, ext) for g in j.generators]
    out = eliminate(PolyIdeal(ext, tuple(gens)), 1, limits)
    return PolyIdeal(i.ring, tuple(p.embed(i.ring, range(i.ring.nvars)) for p in out.generators))


def colon(i: PolyIdeal, f: Polynomial, limits: Limits | None = None) -> PolyIdeal:
    """I : f as (I intersected with <f>) divided by f."""
    if not f:
        raise ValueError("colon by the zero polynomial")
    meet = intersect(i, PolyIdeal(i.ring, (f,)), limits)
    return PolyIdeal(i.ring, tuple(divide_exact_poly(g, f) for g in meet.generators))


def saturate(i: PolyIdeal, f: Polynomial, limits: Limits | None = None) -> PolyIdeal:
    """I : f^inf by eliminating t from I + <1 - t f>."""
    if not f:
        raise ValueError("saturation by the zero polynomial")
    ext = _extend(i.ring)
    t = ext.gen(0)
    gens = [_lift(g, ext) for g in i.generators] + [1 - t * _lift(f, ext)]
    out = eliminate(PolyIdeal(ext, tuple(gens)), 1, limits)
    return PolyIdeal(i.ring, tuple(p.embed(i.ring, range(i.ring.nvars)) for p in out.generators))


def saturate_by_ideal(i: PolyIdeal, gens: Iterable[Polynomial], limits: Limits | None = None) -> PolyIdeal:
    """I : A^inf as the intersection of the saturations by each generator of A."""
    parts = [saturate(i, a, limits) for a in gens]
    if not parts:
        return i
    result = parts[0]
    for p in parts[1:]:
        result = intersect(result, p, limits)
    return result


def radical_membership(g: Polynomial, i: PolyIdeal, limits: Limits | None = None) -> bool:
    """g in sqrt(I) iff 1 lies in I + <1 - t g>."""
    if g.ring.names != i.ring.names:
        raise RingMismatch("polynomial and ideal live in different rings")
    if not g or i.contains(g, limits):
        return True
    ext = Ring((_fresh_name(i.ring),) + i.ring.names)
    t = ext.gen(0)
    gens = [_lift(f, ext) for f in i.generators] + [1 - t * _lift(g, ext)]
    return buchberger(PolyIdeal(ext, tuple(gens)), limits=limits).is_unit()


# ------------------------------------------------------------------ text I/O


def format_ideal(ring: Ring, gens: Iterable[Polynomial]) -> str:
    lines = ["ring: " + " ".join(ring.names)]
    lines += [format_polynomial(g) for g in gens]
    return "\n".join(lines) + "\n"


def parse_ideal(text: str) -> PolyIdeal:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("ring:"):
        raise ValueError("ideal text must start with a 'ring:' header")
    ring = Ring(tuple(lines[0][len("ring:"):].replace(",", " ").split()))
    return PolyIdeal(ring, tuple(ring.parse(ln) for ln in lines[1:]))


def to_macaulay2(ring: Ring, gens: Iterable[Polynomial], name: str = "I") -> str:
    """Macaulay2 source declaring the ring and the ideal."""

    def m2_var(v: str) -> str:
        return v.replace(".", "_")

    names = ", ".join(m2_var(v) for v in ring.names)
    # '.' only ever occurs inside variable names
    body = [m2_var(format_polynomial(g)) for g in gens]
    joined = ",\n    ".join(body) if body else "0_R"
    return f"R = QQ[{names}, MonomialOrder => GRevLex];\n{name} = ideal(\n    {joined}\n    );\n"
