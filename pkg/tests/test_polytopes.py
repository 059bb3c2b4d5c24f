"""Lattice-point DPs against brute force, Ehrhart polynomials and vertex counts."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lib import polytopes
from lib.arith import Polynomial
from lib.errors import CapExceededError, InputError
from lib.polytopes import GE, LE, LatticeCountQuery


def test_fibonacci_small_counts():
    assert polytopes.count_fibonacci(3, 1) == 5
    assert polytopes.count_fibonacci(3, 2) == 14
    assert polytopes.count_fibonacci(4, 0) == 1
    assert polytopes.count_fibonacci(1, 7) == 8


def test_extended_small_counts():
    assert polytopes.count_extended(1, 3) == 7
    assert polytopes.count_extended(2, 1) == 5
    assert polytopes.count_extended(0, 4) == 1
    assert polytopes.count_extended(-1, 4) == 1
    with pytest.raises(InputError):
        polytopes.count_extended(-2, 1)


def test_count_rejects_bad_input():
    with pytest.raises(InputError):
        polytopes.count_fibonacci(0, 1)
    with pytest.raises(InputError):
        polytopes.count_fibonacci(2, -1)
    with pytest.raises(InputError):
        polytopes.count_region(3, (LE,), 2)


@given(st.sampled_from(['fibonacci', 'extended']), st.integers(1, 4), st.integers(0, 4))
@settings(max_examples=60, deadline=None)
def test_dp_matches_brute_force(family, d, k):
    count = getattr(polytopes, f'count_{family}')(d, k)
    assert count == polytopes.brute_force_count(LatticeCountQuery(family, d, k))


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_region_dp_matches_brute_force(data):
    d = data.draw(st.integers(1, 4))
    k = data.draw(st.integers(0, 4))
    pattern = tuple(data.draw(st.lists(st.sampled_from([LE, GE]), min_size=d - 1, max_size=d - 1)))
    query = LatticeCountQuery('region', d, k, pattern)
    assert polytopes.count_region(d, pattern, k) == polytopes.brute_force_count(query)


@pytest.mark.parametrize('d', range(1, 6))
def test_all_le_region_is_fibonacci(d):
    for k in range(5):
        assert polytopes.count_region(d, (LE,) * (d - 1), k) == polytopes.count_fibonacci(d, k)


@pytest.mark.parametrize('d', range(1, 6))
def test_zigzag_order_polytope_count(d):
    for k in range(4):
        assert polytopes.count_zigzag_order(d, k) == polytopes.count_fibonacci(d, k)


def test_normalize_pattern_aliases():
    assert polytopes.normalize_pattern(['≤', 'ge', ' >= ', 'L']) == (LE, GE, GE, LE)
    with pytest.raises(InputError):
        polytopes.normalize_pattern(['<'])


def test_lattice_query_validation():
    with pytest.raises(InputError):
        LatticeCountQuery('cube', 2, 1)
    with pytest.raises(InputError):
        LatticeCountQuery('region', 3, 2)
    with pytest.raises(InputError):
        LatticeCountQuery('region', 3, 2, ('<=',))
    with pytest.raises(InputError):
        LatticeCountQuery('fibonacci', 3, 2, ('<=', '<='))
    assert LatticeCountQuery('region', 3, 2, ('≤', '≥')).pattern == (LE, GE)


def test_brute_force_budget():
    with pytest.raises(CapExceededError):
        polytopes.brute_force_count(LatticeCountQuery('fibonacci', 5, 9), budget=10)


def test_ehrhart_fibonacci_d3():
    assert polytopes.ehrhart_fibonacci(3) == Polynomial((1, Fraction(13, 6), Fraction(3, 2), Fraction(1, 3)))


def test_ehrhart_extended():
    assert polytopes.ehrhart_extended(0) == Polynomial.constant(1)
    assert polytopes.ehrhart_extended(-1) == Polynomial.constant(1)
    assert polytopes.ehrhart_extended(1) == Polynomial((1, 2))
    assert polytopes.ehrhart_extended(2) == Polynomial((1, 2, 2))


@pytest.mark.parametrize('d', range(1, 7))
def test_ehrhart_predicts_beyond_samples(d):
    poly = polytopes.ehrhart_fibonacci(d)
    for k in range(d + 1, d + 4):
        assert poly(k) == polytopes.count_fibonacci(d, k)
    ext = polytopes.ehrhart_extended(d)
    for k in range(d + 1, d + 3):
        assert ext(k) == polytopes.count_extended(d, k)


@pytest.mark.parametrize('d', range(1, 5))
def test_region_volumes_sum_to_one(d):
    assert sum(polytopes.volume_of_region(d, pattern) for pattern in polytopes.all_patterns(d)) == 1


def test_volume_of_two_dimensional_regions():
    assert polytopes.volume_of_region(2, (LE,)) == Fraction(1, 2)
    assert polytopes.volume_of_region(2, (GE,)) == Fraction(1, 2)


@pytest.mark.parametrize('d', range(1, 9))
def test_vertex_recurrence_matches_words(d):
    assert polytopes.extended_vertex_count(d) == polytopes.brute_force_vertex_count(d)


def test_vertex_count_start():
    assert [polytopes.extended_vertex_count(d) for d in (1, 2, 3, 4)] == [2, 4, 6, 12]


@pytest.mark.parametrize('d', range(1, 8))
def test_jacobsthal_is_unit_dilation(d):
    assert polytopes.count_extended(d, 1) == polytopes.jacobsthal(d)


def test_fibonacci_number():
    assert [polytopes.fibonacci_number(n) for n in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]


@pytest.mark.parametrize('d', range(1, 6))
def test_unit_fibonacci_dilation_is_fibonacci_number(d):
    assert polytopes.count_fibonacci(d, 1) == polytopes.fibonacci_number(d + 2)


@pytest.mark.parametrize('d, k', [(1, 2), (2, 1), (2, 3), (3, 2), (4, 1), (4, 2)])
def test_extended_points_symmetric(d, k):
    points = set(polytopes.lattice_points(LatticeCountQuery('extended', d, k)))
    assert len(points) == polytopes.count_extended(d, k)
    assert {tuple(-x for x in point) for point in points} == points
    assert {point[::-1] for point in points} == points


def test_lattice_points_of_small_fibonacci():
    points = sorted(polytopes.lattice_points(LatticeCountQuery('fibonacci', 2, 1)))
    assert points == [(0, 0), (0, 1), (1, 0)]
