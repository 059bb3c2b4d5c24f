"""Exact rationals, polynomials, interpolation and reduction."""
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lib.arith import Polynomial, binomial_poly, compose, interpolate, rational, reduce
from lib.errors import InputError

small_ints = st.integers(-6, 6)
polys = st.lists(small_ints, min_size=1, max_size=5).map(lambda cs: Polynomial(tuple(cs)))
nonzero_polys = polys.filter(lambda p: not p.is_zero)


def test_rational_coercion():
    assert rational('3/4') == Fraction(3, 4)
    assert rational(5) == Fraction(5)
    with pytest.raises(InputError):
        rational(True)
    with pytest.raises(InputError):
        rational(1.5)


def test_polynomial_strips_trailing_zeros():
    p = Polynomial((1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert Polynomial().degree == -1
    assert Polynomial((0, 0)).is_zero


def test_polynomial_str():
    assert str(Polynomial((1, -2, 0, 3))) == '3*x^3 - 2*x + 1'
    assert str(Polynomial((0, -1))) == '-x'
    assert str(Polynomial()) == '0'


def test_polynomial_arithmetic():
    x = Polynomial.x()
    assert (x + 1) * (x - 1) == x ** 2 - 1
    assert (x + 1) ** 3 == Polynomial((1, 3, 3, 1))
    assert (2 - x).coeffs == (2, -1)
    assert Polynomial((1, 1)).evaluate(Fraction(1, 2)) == Fraction(3, 2)
    with pytest.raises(InputError):
        x ** -1


def test_parity_pattern():
    assert Polynomial((1, 0, 3)).parity_pattern() == {0}
    assert Polynomial((0, 1, 0, 2)).parity_pattern() == {1}
    assert Polynomial((1, 1)).parity_pattern() == {0, 1}


@given(polys, st.data())
@settings(max_examples=100)
def test_interpolate_recovers_polynomial(p, data):
    count = max(p.degree, 0) + 2
    xs = data.draw(st.lists(
        st.fractions(min_value=-10, max_value=10, max_denominator=12),
        min_size=count, max_size=count, unique=True,
    ))
    result = interpolate([(x, p(x)) for x in xs])
    assert result == p
    # one spare node, yet the degree does not grow
    assert result.degree == p.degree


def test_interpolate_rejects_bad_nodes():
    with pytest.raises(InputError):
        interpolate([])
    with pytest.raises(InputError):
        interpolate([(1, 2), (1, 3)])


def test_interpolate_squares():
    assert interpolate([(0, 0), (1, 1), (2, 4)]) == Polynomial((0, 0, 1))


@given(polys, polys, st.integers(-5, 5))
@settings(max_examples=100)
def test_compose_evaluates_pointwise(outer, inner, x):
    assert compose(outer, inner)(x) == outer(inner(x))


@pytest.mark.parametrize('shift', range(0, 4))
@pytest.mark.parametrize('d', range(0, 5))
def test_binomial_poly_matches_comb(shift, d):
    poly = binomial_poly(shift, d)
    for k in range(7):
        assert poly(k) == comb(k + shift, d)


def test_reduce_cancels_common_factor():
    x = Polynomial.x()
    rf = reduce(x ** 2 - 1, x - 1)
    assert rf.numerator == Polynomial((1, 1))
    assert rf.denominator == Polynomial((1,))
    assert rf.unreduced_deg_num == 2
    assert rf.unreduced_deg_den == 1


def test_reduce_normalizes_content_and_sign():
    rf = reduce(Polynomial((2,)), Polynomial((0, 4)))
    assert rf.numerator == Polynomial((1,))
    assert rf.denominator == Polynomial((0, 2))
    rf = reduce(Polynomial((1,)), Polynomial((0, -3)))
    assert rf.numerator == Polynomial((-1,))
    assert rf.denominator == Polynomial((0, 3))


def test_reduce_zero_cases():
    rf = reduce(Polynomial(), Polynomial((1, 1)))
    assert rf.numerator.is_zero
    assert rf.denominator == Polynomial((1,))
    with pytest.raises(InputError):
        reduce(Polynomial((1,)), Polynomial())


@given(polys, nonzero_polys, nonzero_polys)
@settings(max_examples=50, deadline=None)
def test_reduce_ignores_common_factors(num, den, h):
    assert reduce(num * h, den * h) == reduce(num, den)


def test_rational_function_pole():
    x = Polynomial.x()
    rf = reduce(Polynomial((1,)), x - 2)
    assert rf(3) == 1
    with pytest.raises(InputError):
        rf(2)
