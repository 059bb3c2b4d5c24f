"""
Agreement of the three e_HK routes, the matrix identities behind them, and
the rational function against direct evaluation.
"""
import itertools
import logging
from fractions import Fraction

from lib import matrices, polytopes, quadrics, repring
from lib.matrices import StructuredMatrixSpec
from lib.report import Check
from suites import grid_check, odd_primes

logger = logging.getLogger(__name__)

KNOWN_SEQUENCE = {1: Fraction(2), 2: Fraction(3, 2), 3: Fraction(4, 3), 4: Fraction(23, 19)}


def closed_form_p3(d):
    """1 + 3·2^d / (3^{d+1} − 2^d + (−1)^d)."""
    return 1 + Fraction(3 * 2 ** d, 3 ** (d + 1) - 2 ** d + (-1) ** d)


def _abs_matrix(rows):
    return tuple(tuple(abs(x) for x in row) for row in rows)


def run(bounds):
    d_max = bounds.get('d_max', 8)
    p_max = bounds.get('p_max', 31)
    primes = odd_primes(p_max)
    checks = []

    checks.append(grid_check('e_HK(A_{3,d}) = 2, 3/2, 4/3, 23/19 by every route', (
        ((3, d, method), quadrics.compute(3, d, method).value == value)
        for d, value in KNOWN_SEQUENCE.items() for method in quadrics.METHODS
    )))
    checks.append(grid_check('closed form at p = 3, d ≤ 12', (
        ((3, d, method), quadrics.compute(3, d, method).value == closed_form_p3(d))
        for d in range(1, 13) for method in quadrics.METHODS
    )))
    checks.append(grid_check(f'repring = matrix = ehrhart, p ≤ {p_max}, d ≤ {d_max}', (
        ((p, d), quadrics.ehk_repring(p, d) == quadrics.ehk_matrix(p, d) == quadrics.ehk_ehrhart(p, d))
        for p in primes for d in range(1, d_max + 1)
    )))

    # ── matrix identities ──
    grid = [(n, d) for n in range(1, 13) for d in range(1, d_max + 1)]
    checks.append(grid_check('[T_n^{d+1}]_11 = (2n+1)^d + 2^d|(n−1)F_d|', (
        ((n, d), matrices.corner_power(StructuredMatrixSpec.T(n), d + 1)
         == (2 * n + 1) ** d + 2 ** d * polytopes.count_fibonacci(d, n - 1))
        for n, d in grid
    )))
    checks.append(grid_check('[Z_n^{d+1}]_11 = 2^d|(n−1)F_d|', (
        ((n, d), matrices.corner_power(StructuredMatrixSpec.Z(n), d + 1)
         == 2 ** d * polytopes.count_fibonacci(d, n - 1))
        for n, d in grid
    )))
    checks.append(grid_check('[N_a^{d+1}]_11 = |aE_{d−2}|', (
        ((a, d), matrices.corner_power(StructuredMatrixSpec.N(a), d + 1)
         == polytopes.count_extended(d - 2, a))
        for a, d in grid
    )))

    # ── ring-derived matrices ──
    cases = []
    for p in odd_primes(31):
        a = (p - 1) // 2
        t = _abs_matrix(repring.mult_matrix(repring.delta(p, a) + repring.delta(p, a + 1)))
        n = _abs_matrix(repring.mult_matrix(repring.lam(p, a) * (-1) ** a))
        cases.append(((p, 'T'), t == matrices.dense(StructuredMatrixSpec.T(a))))
        cases.append(((p, 'N'), n == matrices.dense(StructuredMatrixSpec.N(a))))
    checks.append(grid_check('|mult_matrix| = T_a and N_a for a ≤ 15', cases))

    cases = []
    for p in odd_primes(13):
        for n in range(2, p + 1):
            rows = repring.mult_matrix(repring.frobenius_factor(p, n))
            ok = all(x == (-1) ** (i + j) * abs(x) for i, row in enumerate(rows) for j, x in enumerate(row))
            cases.append(((p, n), ok))
    checks.append(grid_check('checkerboard signs of (n−r)δ_a + rδ_{a+1}', cases))

    cases = []
    for p in (3, 5, 7):
        for length in (1, 2, 3):
            for exps in itertools.product(range(2, p + 1), repeat=length):
                cases.append(((p, exps), repring.diag_colength(p, exps)
                              == matrices.hanmonsky_colength_matrix(p, exps)))
    checks.append(grid_check('diag_colength = (1,1) entry of M_{n_0}…M_{n_d}', cases))

    cases = []
    for p in odd_primes(13):
        a = (p - 1) // 2
        u = repring.delta(p, a) + repring.delta(p, a + 1)
        for e in range(1, 6):
            w = repring.power(u, e)
            cases.append(((p, e), repring.D(w) == repring.delta_coordinate_sum(w)))
    checks.append(grid_check('D = δ-coordinate sum', cases))

    # ── the rational function ──
    fn_d = min(d_max, 10)
    checks.append(grid_check(f'e_HK(p) function = ehk_matrix, odd p ≤ 61, d ≤ {fn_d}', (
        ((p, d), quadrics.ehk_function(d).evaluate(p) == quadrics.ehk_matrix(p, d))
        for d in range(1, fn_d + 1) for p in range(3, 62, 2)
    )))
    checks.append(grid_check('unreduced numerator and denominator have degree d', (
        (d, quadrics.ehk_function(d).unreduced_num.degree == d
         and quadrics.ehk_function(d).unreduced_den.degree == d)
        for d in range(1, fn_d + 1)
    )))
    checks.append(grid_check('Ehrhart and matrix interpolation give the same function', (
        (d, quadrics.ehk_function(d, 'ehrhart') == quadrics.ehk_function(d, 'matrix'))
        for d in range(1, fn_d + 1)
    )))
    checks.append(Check('value range 1 < e_HK ≤ 2', all(
        1 < quadrics.ehk_ehrhart(p, d) <= 2 for p in primes for d in range(1, d_max + 1)
    )))
    logger.info('identities: %d checks', len(checks))
    return checks
