"""Arithmetic in the representation ring Γ."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import KNOWN_P3
from lib import repring
from lib.errors import InputError
from lib.repring import GammaElement


def elements(p):
    return st.lists(st.integers(-3, 3), min_size=p, max_size=p).map(lambda cs: GammaElement(p, tuple(cs)))


ring_triples = st.sampled_from([3, 5, 7]).flatmap(
    lambda p: st.tuples(elements(p), elements(p), elements(p)))


def test_gamma_element_validation():
    with pytest.raises(InputError):
        GammaElement(5, (1, 2))
    with pytest.raises(InputError):
        GammaElement(9, (0,) * 9)
    with pytest.raises(InputError):
        repring.lam(5, 5)
    with pytest.raises(InputError):
        repring.delta(5, 0)


def test_lambda_products_are_runs():
    assert repring.lambda_mul(5, 1, 1).coeffs == (1, 1, 1, 0, 0)
    assert repring.lambda_mul(5, 0, 3).coeffs == (0, 0, 0, 1, 0)
    # i + j past p − 1 folds back
    assert repring.lambda_mul(5, 3, 4).coeffs == (0, 1, 0, 0, 0)


def test_multiply_agrees_with_lambda_mul():
    p = 7
    for i in range(p):
        for j in range(p):
            assert repring.multiply(repring.lam(p, i), repring.lam(p, j)) == repring.lambda_mul(p, i, j)


@given(ring_triples)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(triple):
    u, v, w = triple
    assert u * v == v * u
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w
    assert u * GammaElement.one(u.p) == u


def test_mismatched_rings():
    with pytest.raises(InputError):
        repring.multiply(repring.lam(3, 1), repring.lam(5, 1))
    with pytest.raises(InputError):
        repring.lam(3, 1) + repring.lam(5, 1)


def test_scalar_and_power():
    u = repring.lam(5, 1)
    assert (2 * u).coeffs == (0, 2, 0, 0, 0)
    assert u ** 2 == u * u
    assert repring.power(u, 0) == GammaElement.one(5)
    with pytest.raises(InputError):
        repring.power(u, -1)


@pytest.mark.parametrize('p', [3, 5, 7, 11])
def test_delta_coordinates_invert_the_basis_change(p):
    for m in range(1, p + 1):
        coords = repring.delta_coordinates(repring.delta(p, m))
        assert coords == tuple(1 if i == m else 0 for i in range(1, p + 1))


@pytest.mark.parametrize('p', [5, 7])
def test_d_equals_delta_coordinate_sum(p):
    a = (p - 1) // 2
    u = repring.delta(p, a) + repring.delta(p, a + 1)
    for e in range(1, 5):
        w = u ** e
        assert repring.D(w) == repring.delta_coordinate_sum(w)


def test_mult_matrix_of_one_is_identity():
    rows = repring.mult_matrix(GammaElement.one(5))
    assert rows == tuple(tuple(int(i == j) for j in range(5)) for i in range(5))


def test_frobenius_factor():
    assert repring.frobenius_factor(5, 5) == GammaElement.one(5) * 5
    assert repring.frobenius_factor(5, 2) == repring.delta(5, 2) + repring.delta(5, 3)
    assert repring.frobenius_factor(7, 3) == repring.delta(7, 2) * 2 + repring.delta(7, 3)
    with pytest.raises(InputError, match='out of scope'):
        repring.frobenius_factor(5, 1)
    with pytest.raises(InputError):
        repring.frobenius_factor(5, 6)


def test_diag_colength():
    # a single factor has one δ-summand per unit of n
    for n in range(2, 8):
        assert repring.diag_colength(7, (n,)) == n
    assert repring.diag_colength(5, (5, 5, 5)) == 125
    with pytest.raises(InputError):
        repring.diag_colength(5, ())


@pytest.mark.parametrize('d', sorted(KNOWN_P3))
def test_quadric_at_p3(d):
    assert repring.ehk_quadric_repring(3, d) == KNOWN_P3[d]


def test_quadric_d4_closed_form():
    for p in (5, 7, 11, 13):
        assert repring.ehk_quadric_repring(p, 4) == 1 + Fraction(5 * p * p + 3, 12 * (2 * p * p + 1))


def test_quadric_rejects_bad_input():
    with pytest.raises(InputError):
        repring.ehk_quadric_repring(9, 2)
    with pytest.raises(InputError):
        repring.ehk_quadric_repring(5, 0)
