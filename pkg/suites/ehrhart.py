"""
Ehrhart polynomials and h*-vectors of F_d and E_d.
"""
import logging
from fractions import Fraction
from math import factorial

from lib import combinatorics, polytopes, quadrics
from lib.polytopes import LatticeCountQuery
from lib.report import Check, probe
from suites import grid_check

logger = logging.getLogger(__name__)


def run(bounds):
    d_max = bounds.get('d_max', 10)
    k_max = 6
    checks = []
    dims = range(1, d_max + 1)

    checks.append(grid_check('Euler numbers: boustrophedon = brute force, n ≤ 9', (
        (n, combinatorics.euler_number(n) == combinatorics.count_alternating_brute(n))
        for n in range(0, 10)
    )))
    checks.append(grid_check('swap table sums to E_d', (
        (d, combinatorics.swap_table(d).total == combinatorics.euler_number(d)) for d in dims
    )))
    checks.append(grid_check('swap table is palindromic', (
        (d, combinatorics.swap_table(d).is_palindromic) for d in dims if d >= 2
    )))
    checks.append(grid_check('Σ m·s_d(m) = E_d(d/2 − 1)', (
        (d, combinatorics.facet_relation_holds(combinatorics.swap_table(d))) for d in dims
    )))
    checks.append(grid_check(f'|kF_d| = Σ_m s_d(m)·C(k+d−m, d), k ≤ {k_max}', (
        ((d, k), polytopes.count_fibonacci(d, k) == combinatorics.ehrhart_count_from_swaps(d, k))
        for d in dims for k in range(k_max + 1)
    )))
    checks.append(grid_check('alternating binomial-sum form of |kF_d|', (
        ((d, k), polytopes.count_fibonacci(d, k) == combinatorics.ehrhart_from_binomial_sums(d, k))
        for d in dims for k in range(k_max + 1)
    )))
    checks.append(grid_check('interpolated P_d = h*-vector expansion', (
        (d, polytopes.ehrhart_fibonacci(d) == combinatorics.ehrhart_from_swaps(d)) for d in dims
    )))
    checks.append(grid_check('leading coefficient of P_d is E_d/d!', (
        (d, polytopes.ehrhart_fibonacci(d).leading_coefficient
         == Fraction(combinatorics.euler_number(d), factorial(d)))
        for d in dims
    )))

    cases = []
    for d in range(3, d_max + 1):
        for row in quadrics.ehrhart_coeff_check(d):
            cases.append(((d, row.name, row.expected, row.actual), row.ok))
    checks.append(grid_check('three leading coefficients and the shifted x^{d−1} term', cases))

    checks.append(grid_check('P_d has positive coefficients', (
        (d, quadrics.ehrhart_positivity(d)) for d in dims
    )))
    checks.append(grid_check('even pairing identity', (
        (d, combinatorics.even_pairing_identity(d)) for d in dims if d % 2 == 0
    )))
    checks.append(grid_check('odd pairing identity', (
        (d, combinatorics.odd_pairing_identity(d)) for d in dims if d % 2 == 1 and d >= 3
    )))

    # brute-force oracles on small boxes
    small = [(d, k) for d in range(1, 6) for k in range(0, 4)]
    checks.append(grid_check('DP = brute force on F_d and E_d', (
        ((family, d, k), getattr(polytopes, f'count_{family}')(d, k)
         == polytopes.brute_force_count(LatticeCountQuery(family, d, k)))
        for family in ('fibonacci', 'extended') for d, k in small
    )))
    checks.append(grid_check('zigzag order polytope has the same lattice points as F_d', (
        ((d, k), polytopes.count_zigzag_order(d, k) == polytopes.count_fibonacci(d, k))
        for d, k in small
    )))
    checks.append(grid_check('|1·E_d| is Jacobsthal', (
        (d, polytopes.count_extended(d, 1) == polytopes.jacobsthal(d)) for d in dims
    )))
    checks.append(grid_check('|1·F_d| = Fib(d + 2)', (
        (d, polytopes.count_fibonacci(d, 1) == polytopes.fibonacci_number(d + 2)) for d in dims
    )))
    checks.append(grid_check('E_d vertex recurrence = vertex words', (
        (d, polytopes.extended_vertex_count(d) == polytopes.brute_force_vertex_count(d))
        for d in range(1, 11)
    )))

    for d, lhs, rhs, holds in combinatorics.question_probe(min(d_max, 11) + 1):
        checks.append(probe(f's_{d + 1}(1) = s_{d}(1) + s_{d - 1}(1) + {d - 1}', holds, f'{lhs} vs {rhs}'))
    logger.info('ehrhart: %d checks', len(checks))
    return checks
