from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jetgraph.poly import (
    GREVLEX,
    LEX,
    MonomialOrder,
    NotDivisible,
    Polynomial,
    PolynomialSyntaxError,
    Ring,
    RingMismatch,
    block_order,
    divide_exact,
    divide_exact_poly,
    format_polynomial,
    mono_lcm,
    mono_mul,
)

R = Ring(("x", "y", "z"))

exponents = st.tuples(*[st.integers(0, 3)] * 3)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.dictionaries(exponents, coeffs, max_size=5).map(
    lambda d: Polynomial(R, {m: c for m, c in d.items() if c})
)
orders = st.sampled_from([GREVLEX, LEX, block_order(1), block_order(2)])


def test_canonical_format():
    f = R.parse("-3*z + 2*y*x^2")
    assert format_polynomial(f) == "2*x^2*y - 3*z"
    assert str(R.zero()) == "0"
    assert str(R.parse("1/2*x - 1")) == "1/2*x - 1"


def test_parse_parentheses_and_powers():
    assert R.parse("(x + y)^2") == R.parse("x^2 + 2*x*y + y^2")
    assert R.parse("x*(y - z)") == R.parse("x*y - x*z")
    assert R.parse("-(x)") == -R.gen(0)


@pytest.mark.parametrize("bad", ["x +", "x^", "w", "(x", "x**2", "2//3"])
def test_parse_errors(bad):
    with pytest.raises(PolynomialSyntaxError):
        R.parse(bad)


def test_ring_mismatch():
    other = Ring(("x", "y"))
    with pytest.raises(RingMismatch):
        R.gen(0) + other.gen(0)


def test_grevlex_and_lex_leading_terms():
    f = R.parse("x*z^2 + y^3")
    assert f.leading_monomial(GREVLEX) == (0, 3, 0)
    assert f.leading_monomial(LEX) == (1, 0, 2)


def test_block_order_eliminates_first_block():
    f = R.parse("y^5 + x")
    assert f.leading_monomial(block_order(1)) == (1, 0, 0)


def test_exact_division():
    f = R.parse("x^2*y + x*y*z")
    assert divide_exact(f, (1, 1, 0)) == R.parse("x + z")
    with pytest.raises(NotDivisible):
        divide_exact(f, (0, 0, 1))
    assert divide_exact_poly(R.parse("x^2 - y^2"), R.parse("x + y")) == R.parse("x - y")
    with pytest.raises(NotDivisible):
        divide_exact_poly(R.parse("x^2 + y^2"), R.parse("x + y"))


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == R.zero()
    assert a * R.constant(1) == a


@given(polys)
def test_format_parse_roundtrip(f):
    assert R.parse(format_polynomial(f)) == f


@given(polys)
def test_hash_matches_equality(f):
    g = R.parse(str(f))
    assert hash(f) == hash(g)


@given(orders, exponents, exponents, exponents)
def test_order_is_multiplicative(order: MonomialOrder, a, b, c):
    if order.key(a) < order.key(b):
        assert order.key(mono_mul(a, c)) < order.key(mono_mul(b, c))


@given(orders, exponents)
def test_order_is_well_founded_on_divisors(order, a):
    # the unit monomial is smallest, and a monomial never sits below its divisors
    assert order.key((0, 0, 0)) <= order.key(a)
    assert order.key(a) <= order.key(mono_lcm(a, (1, 0, 0)))


@given(polys, st.integers(0, 3))
def test_pow_matches_repeated_product(f, k):
    expect = R.constant(1)
    for _ in range(k):
        expect = expect * f
    assert f ** k == expect


def test_fraction_coefficients_are_exact():
    f = R.parse("1/3*x") + R.parse("2/3*x")
    assert f == R.gen(0)
    assert f.leading_coefficient(GREVLEX) == Fraction(1)
