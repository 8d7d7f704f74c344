"""Monomial ideals handled combinatorially, without Groebner bases."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from .graph import _bits, minimal_transversals
from .poly import (
    Monomial,
    Polynomial,
    Ring,
    RingMismatch,
    is_squarefree,
    mono_divides,
    mono_lcm,
    mono_support,
)


class NotSquarefree(ValueError):
    pass


def minimal_generators(gens: Iterable[Monomial]) -> list[Monomial]:
    """Divisibility-minimal subset of ``gens`` (duplicates collapse)."""
    ordered = sorted(set(map(tuple, gens)), key=lambda m: (sum(m), m))
    kept: list[Monomial] = []
    for m in ordered:
        if not any(mono_divides(k, m) for k in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """An ideal generated by monomials; ``generators`` is minimal and sorted."""

    ring: Ring
    generators: tuple[Monomial, ...]

    @classmethod
    def from_monomials(cls, ring: Ring, gens: Iterable[Monomial]) -> MonomialIdeal:
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != ring.nvars:
                raise RingMismatch("generator arity does not match the ring")
        key = ring.order.key
        return cls(ring, tuple(sorted(minimal_generators(gens), key=key, reverse=True)))

    @classmethod
    def from_variables(cls, ring: Ring, indices: Iterable[int]) -> MonomialIdeal:
        return cls.from_monomials(ring, [ring.var_monomial(i) for i in indices])

    @classmethod
    def unit(cls, ring: Ring) -> MonomialIdeal:
        return cls(ring, (ring.one(),))

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(not any(g) for g in self.generators)

    def is_squarefree(self) -> bool:
        return all(is_squarefree(g) for g in self.generators)

    def polynomials(self) -> list[Polynomial]:
        return [self.ring.monomial(g) for g in self.generators]

    def contains_monomial(self, m: Monomial) -> bool:
        return any(mono_divides(g, m) for g in self.generators)

    def __contains__(self, f) -> bool:
        if isinstance(f, Polynomial):
            return mono_member(f, self)
        return self.contains_monomial(tuple(f))

    def __str__(self):
        body = ", ".join(self.ring.format_monomial(g) for g in self.generators)
        return f"<{body}>"

    def to_poly_ideal(self):
        from .groebner import PolyIdeal

        return PolyIdeal(self.ring, tuple(self.polynomials()))

    def embed(self, target: Ring, mapping=None) -> MonomialIdeal:
        return MonomialIdeal.from_monomials(
            target, [p.embed(target, mapping).monomials()[0] for p in self.polynomials()]
        )


def minimalize(ring: Ring, gens: Iterable[Monomial]) -> MonomialIdeal:
    return MonomialIdeal.from_monomials(ring, gens)


def _same_ring(i: MonomialIdeal, j: MonomialIdeal):
    if i.ring.names != j.ring.names:
        raise RingMismatch("monomial ideals live in different rings")


def mono_sum(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _same_ring(i, j)
    return MonomialIdeal.from_monomials(i.ring, i.generators + j.generators)


def mono_intersect(*ideals: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise lcms, folded left."""
    if not ideals:
        raise ValueError("need at least one ideal")

    def pair(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
        _same_ring(i, j)
        return MonomialIdeal.from_monomials(
            i.ring, [mono_lcm(a, b) for a in i.generators for b in j.generators]
        )

    return reduce(pair, ideals)


def mono_colon(i: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    m = tuple(m)
    return MonomialIdeal.from_monomials(
        i.ring, [tuple(max(a - b, 0) for a, b in zip(g, m)) for g in i.generators]
    )


def mono_colon_saturate(i: MonomialIdeal, m: Monomial, saturate: bool = False) -> MonomialIdeal:
    """I : m, or I : m^inf by repeating the colon until it stabilizes."""
    m = tuple(m)
    current = mono_colon(i, m)
    if not saturate:
        return current
    while True:
        nxt = mono_colon(current, m)
        if nxt.generators == current.generators:
            return current
        current = nxt


def mono_radical(i: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal.from_monomials(i.ring, [mono_support(g) for g in i.generators])


def mono_equal(i: MonomialIdeal, j: MonomialIdeal) -> bool:
    _same_ring(i, j)
    return i.generators == j.generators


def mono_contains(big: MonomialIdeal, small: MonomialIdeal) -> bool:
    return all(big.contains_monomial(g) for g in small.generators)


def minimal_primes(i: MonomialIdeal) -> list[MonomialIdeal]:
    """Minimal primes of a squarefree monomial ideal, via minimal transversals."""
    if not i.is_squarefree():
        raise NotSquarefree(f"{i} is not squarefree")
    if i.is_unit():
        return []
    edges = [sum(1 << k for k, e in enumerate(g) if e) for g in i.generators]
    covers = minimal_transversals(i.ring.nvars, edges, cap=max(25, i.ring.nvars))
    return [MonomialIdeal.from_variables(i.ring, _bits(c)) for c in covers]


def mono_member(f: Polynomial, i: MonomialIdeal) -> bool:
    if f.ring.names != i.ring.names:
        raise RingMismatch("polynomial and ideal live in different rings")
    return all(i.contains_monomial(m) for m in f.terms)
