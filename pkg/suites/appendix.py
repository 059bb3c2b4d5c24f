"""
Corner words, their φ-fibers, and the leading coefficient of
k ↦ [Q(q,k)^{n+1}]_11.
"""
import logging
from fractions import Fraction
from math import factorial

from lib import appendix, combinatorics
from lib.appendix import GLWord
from lib.errors import InconsistencyError
from lib.report import Check, probe
from suites import grid_check

logger = logging.getLogger(__name__)

FIBER_MAX = 10
Q_VALUES = (0, 1, 2, 3, 5)


def _leading(q, n):
    try:
        return appendix.leading_coeff_Q(q, n)
    except InconsistencyError as e:
        return e


def run(bounds):
    n_max = min(bounds.get('n_max', 6), 6)
    checks = []

    cases, totals = [], []
    for n in range(1, FIBER_MAX + 1):
        histogram = appendix.fiber_histogram(n)
        for bits in range(2 ** n):
            v = GLWord(''.join('l' if bits >> i & 1 else 'g' for i in range(n)))
            cases.append((str(v), histogram.get(v.letters, 0) == appendix.expected_fiber(v)))
        totals.append((n, sum(histogram.values()) == (3 ** n + 1) // 2))
    checks.append(grid_check(f'|φ^-1(v)| = 2^max(0, k−1), length ≤ {FIBER_MAX}', cases))
    checks.append(grid_check('Σ_v |φ^-1(v)| = |W_n| = (3^n + 1)/2', totals))
    checks.append(grid_check('filtered lifts agree with the fiber histogram, length ≤ 6', (
        (str(v), appendix.fiber_count(v) == appendix.expected_fiber(v))
        for n in range(1, 7)
        for v in (GLWord(''.join('l' if bits >> i & 1 else 'g' for i in range(n))) for bits in range(2 ** n))
    )))

    cases = []
    q_values = Q_VALUES if bounds.q is None else (bounds.q,)
    for q in q_values:
        for n in range(1, n_max + 1):
            value = _leading(q, n)
            cases.append(((q, n, value), value == appendix.leading_coeff_law(q, n)))
    law = '[Q(q,k)^(n+1)]_11 leading coefficient = q^(n+1)/(2·n!)·(A(n,0) + A_n(2/q))'
    checks.append(grid_check(f'{law}, q ∈ {q_values}, n ≤ {n_max}', cases))
    for q in q_values:
        for n in range(1, n_max + 1):
            literal = appendix.inverted_leading_coeff_law(q, n)
            checks.append(probe(f'q={q}, n={n}: q²/(2·n!)·(A(n,0) + A_n(2q))', literal == appendix.leading_coeff_law(q, n), str(literal)))
    checks.append(grid_check('leading_coeff_Q(2, n) = 2^n(1 + E_n/n!)', (
        (n, _leading(2, n) == 2 ** n * (1 + Fraction(combinatorics.euler_number(n), factorial(n))))
        for n in range(1, n_max + 1)
    )))

    cases = []
    for n in range(1, n_max + 1):
        for row in appendix.verify_alt_volume_lemma(n):
            cases.append(((n, row.j, row.volume, row.expected), row.ok))
    checks.append(grid_check('Σ region volumes with j ≥-signs = A(n, j)/n!', cases))
    logger.info('appendix: %d checks', len(checks))
    return checks
