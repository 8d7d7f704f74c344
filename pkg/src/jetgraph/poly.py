"""Sparse multivariate polynomials over the rationals.

Monomials are dense exponent tuples whose length is the number of ring
variables. Polynomials map monomials to nonzero ``Fraction`` coefficients and
are treated as immutable values.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Mapping

Monomial = tuple[int, ...]

ORDER_KINDS = ("grevlex", "lex")


class RingMismatch(ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass


# ---------------------------------------------------------------- monomials


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(operator.add, a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Return a / b; the caller guarantees that b divides a."""
    return tuple(map(operator.sub, a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a divides b."""
    return all(map(operator.le, a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(max, a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(min, a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


def mono_support(a: Monomial) -> Monomial:
    """Squarefree part: the product of the variables occurring in a."""
    return tuple(1 if e else 0 for e in a)


def is_squarefree(a: Monomial) -> bool:
    return all(e <= 1 for e in a)


# ------------------------------------------------------------------- orders


def _grevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in reversed(m)))


def _lex_key(m: Monomial):
    return m


_BASE_KEYS = {"grevlex": _grevlex_key, "lex": _lex_key}


@dataclass(frozen=True)
class MonomialOrder:
    """A term order; larger sort keys mean larger monomials.

    ``kind="block"`` compares the first ``block`` variables with ``outer``
    and breaks ties on the remaining variables with ``inner``; it eliminates
    the leading block.
    """

    kind: str = "grevlex"
    block: int = 0
    outer: str = "lex"
    inner: str = "grevlex"

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block":
            if self.outer not in ORDER_KINDS or self.inner not in ORDER_KINDS:
                raise ValueError("block orders combine 'grevlex' and 'lex'")
            if self.block < 0:
                raise ValueError("block size must be nonnegative")

    @cached_property
    def key(self) -> Callable[[Monomial], object]:
        if self.kind != "block":
            return _BASE_KEYS[self.kind]
        k = self.block
        outer, inner = _BASE_KEYS[self.outer], _BASE_KEYS[self.inner]
        return lambda m: (outer(m[:k]), inner(m[k:]))

    def compare(self, a: Monomial, b: Monomial) -> int:
        """Return 1, 0 or -1 as a is greater than, equal to or less than b."""
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block_order(k: int) -> MonomialOrder:
    """Lex on the first k variables, grevlex on the rest."""
    return MonomialOrder("block", block=k, outer="lex", inner="grevlex")


def compare_monomials(order: MonomialOrder, m1: Monomial, m2: Monomial) -> int:
    if len(m1) != len(m2):
        raise RingMismatch("monomials of different arity")
    return order.compare(m1, m2)


# --------------------------------------------------------------------- rings

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_.']*\Z")


@dataclass(frozen=True)
class Ring:
    names: tuple[str, ...]
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError("ring variable names must be distinct")
        for name in self.names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def with_order(self, order: MonomialOrder) -> Ring:
        return Ring(self.names, order)

    def one(self) -> Monomial:
        return (0,) * len(self.names)

    def var_monomial(self, name_or_index) -> Monomial:
        i = name_or_index if isinstance(name_or_index, int) else self.index[name_or_index]
        m = [0] * len(self.names)
        m[i] = 1
        return tuple(m)

    def gen(self, name_or_index) -> Polynomial:
        return Polynomial(self, {self.var_monomial(name_or_index): Fraction(1)})

    def gens(self) -> list[Polynomial]:
        return [self.gen(i) for i in range(self.nvars)]

    def constant(self, c) -> Polynomial:
        return Polynomial(self, {self.one(): Fraction(c)})

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def monomial(self, m: Monomial, c=1) -> Polynomial:
        return Polynomial(self, {tuple(m): Fraction(c)})

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(text, self)


# --------------------------------------------------------------- polynomials


class Polynomial:
    """An element of ``ring``; ``terms`` never stores zero coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, object] | None = None):
        self.ring = ring
        clean = {}
        if terms:
            n = ring.nvars
            for m, c in terms.items():
                if len(m) != n:
                    raise RingMismatch(f"monomial {m} has wrong arity for {n} variables")
                c = c if isinstance(c, Fraction) else Fraction(c)
                if c:
                    clean[tuple(m)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> Polynomial:
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # ---- basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.sorted_terms()]

    def sorted_terms(self, order: MonomialOrder | None = None) -> list[tuple[Monomial, Fraction]]:
        key = (order or self.ring.order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder | None = None) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=(order or self.ring.order).key)

    def leading_coefficient(self, order: MonomialOrder | None = None) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def support(self) -> set[int]:
        """Indices of the variables occurring in some term."""
        out = set()
        for m in self.terms:
            out.update(i for i, e in enumerate(m) if e)
        return out

    # ---- arithmetic
    def _check(self, other: Polynomial):
        if self.ring.names != other.ring.names:
            raise RingMismatch("polynomials live in different rings")

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(map(operator.add, m1, m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = self.ring.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> Polynomial:
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {m: v * c for m, v in self.terms.items()})

    def shift(self, m: Monomial) -> Polynomial:
        """Multiply by the monomial m."""
        return Polynomial._raw(self.ring, {mono_mul(k, m): c for k, c in self.terms.items()})

    def monic(self, order: MonomialOrder | None = None) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coefficient(order))

    # ---- equality and printing
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.names == other.ring.names and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"

    # ---- ring changes
    def embed(self, target: Ring, mapping: Iterable[int] | None = None) -> Polynomial:
        """Rename variables into ``target``.

        ``mapping[i]`` is the target index of source variable i; by default
        variables are matched by name.
        """
        if mapping is None:
            mapping = [target.index[name] for name in self.ring.names]
        mapping = list(mapping)
        n = target.nvars
        out = {}
        for m, c in self.terms.items():
            new = [0] * n
            for i, e in enumerate(m):
                if e:
                    new[mapping[i]] += e
            out[tuple(new)] = c
        return Polynomial._raw(target, out)


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    a._check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def divide_exact(f: Polynomial, m: Monomial) -> Polynomial:
    """Return f / m, raising NotDivisible unless m divides every term."""
    m = tuple(m)
    out = {}
    for k, c in f.terms.items():
        if not mono_divides(m, k):
            raise NotDivisible(f"{f.ring.format_monomial(m)} does not divide {f}")
        out[mono_div(k, m)] = c
    return Polynomial._raw(f.ring, out)


def divide_exact_poly(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact quotient f / g by multivariate division; the remainder must vanish."""
    f._check(g)
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if g.is_monomial():
        (m, c), = g.terms.items()
        return divide_exact(f, m).scale(1 / c)
    key = f.ring.order.key
    lm = max(g.terms, key=key)
    lc = g.terms[lm]
    rest = dict(f.terms)
    quotient = {}
    while rest:
        m = max(rest, key=key)
        if not mono_divides(lm, m):
            raise NotDivisible(f"{g} does not divide {f}")
        q = mono_div(m, lm)
        c = rest[m] / lc
        quotient[q] = c
        for gm, gc in g.terms.items():
            t = mono_mul(gm, q)
            v = rest.get(t, 0) - c * gc
            if v:
                rest[t] = v
            else:
                rest.pop(t, None)
    return Polynomial._raw(f.ring, quotient)


# ----------------------------------------------------------------- text form


def _format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial, order: MonomialOrder | None = None) -> str:
    if not p.terms:
        return "0"
    pieces = []
    for i, (m, c) in enumerate(p.sorted_terms(order)):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = p.ring.format_monomial(m)
        if mono == "1":
            body = _format_coefficient(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coefficient(a)}*{mono}"
        if i == 0:
            pieces.append(("-" if sign == "-" else "") + body)
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_.']*)|(?P<op>[-+*^()]))"
)


class PolynomialSyntaxError(ValueError):
    pass


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match or match.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character at {pos} in {text!r}")
        kind = match.lastgroup
        tokens.append((kind, match.group(kind)))
        pos = match.end()
    return tokens


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse sums of products of coefficients and variable powers.

    Parentheses and integer powers of parenthesized expressions are accepted
    so that printed output of any polynomial parses back.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        if pos >= len(tokens):
            raise PolynomialSyntaxError(f"unexpected end of input in {text!r}")
        tok = tokens[pos]
        pos += 1
        return tok

    def expr():
        sign = 1
        kind, val = peek()
        if kind == "op" and val in "+-":
            take()
            sign = -1 if val == "-" else 1
        result = term().scale(sign)
        while True:
            kind, val = peek()
            if kind == "op" and val in "+-":
                take()
                t = term()
                result = result + t if val == "+" else result - t
            else:
                return result

    def term():
        result = power()
        while peek() == ("op", "*"):
            take()
            result = result * power()
        return result

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, val = take()
            if kind != "num" or "/" in val:
                raise PolynomialSyntaxError("exponents must be nonnegative integers")
            return base ** int(val)
        return base

    def atom():
        if pos >= len(tokens):
            raise PolynomialSyntaxError(f"unexpected end of input in {text!r}")
        kind, val = take()
        if kind == "num":
            return ring.constant(Fraction(val))
        if kind == "name":
            if val not in ring.index:
                raise PolynomialSyntaxError(f"unknown variable {val!r}")
            return ring.gen(val)
        if val == "(":
            inner = expr()
            if take() != ("op", ")"):
                raise PolynomialSyntaxError("unbalanced parentheses")
            return inner
        if val == "-":
            return -power()
        raise PolynomialSyntaxError(f"unexpected token {val!r}")

    if not tokens:
        raise PolynomialSyntaxError("empty polynomial")
    result = expr()
    if pos != len(tokens):
        raise PolynomialSyntaxError(f"trailing input in {text!r}")
    return result
