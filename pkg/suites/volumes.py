"""
Regions of the cube cut by x_i + x_{i+1} = 1.
"""
import logging
from fractions import Fraction
from math import factorial

from lib import appendix, combinatorics, polytopes
from lib.polytopes import LatticeCountQuery
from lib.report import Check
from suites import grid_check

logger = logging.getLogger(__name__)


def run(bounds):
    n_max = min(bounds.get('n_max', 6), 6)
    checks = []
    for n in range(1, n_max + 1):
        rows = appendix.verify_alt_volume_lemma(n)
        for row in rows:
            checks.append(Check(f'n={n}, j={row.j}: volume {row.volume} = A({n},{row.j})/{n}!',
                                row.ok, witness=None if row.ok else row.patterns))
        checks.append(Check(f'n={n}: region volumes sum to 1', sum(r.volume for r in rows) == 1))
    checks.append(grid_check('all-≤ region is F_n with volume E_n/n!', (
        (n, polytopes.volume_of_region(n, (polytopes.LE,) * (n - 1))
         == Fraction(combinatorics.euler_number(n), factorial(n)))
        for n in range(1, n_max + 1)
    )))
    checks.append(grid_check('region DP = brute force, n ≤ 4, k ≤ 3', (
        ((n, pattern, k), polytopes.count_region(n, pattern, k)
         == polytopes.brute_force_count(LatticeCountQuery('region', n, k, pattern)))
        for n in range(1, 5) for pattern in polytopes.all_patterns(n) for k in range(4)
    )))
    logger.info('volumes: %d checks', len(checks))
    return checks
