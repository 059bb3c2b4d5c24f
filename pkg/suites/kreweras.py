"""
Kreweras' alternating surjections against the swap table, and the
reported gap quantity.
"""
import logging
from math import comb

from lib import combinatorics
from lib.report import probe
from suites import grid_check

logger = logging.getLogger(__name__)


def run(bounds):
    n_max = bounds.get('n_max', 9)
    checks = [grid_check(f'u^n_(n−r) = Σ_m C(m, r)·s_n(m), n ≤ {n_max}', (
        ((n, r), combinatorics.kreweras_u(n, n - r)
         == sum(comb(m, r) * c for m, c in enumerate(combinatorics.swap_table(n).s)))
        for n in range(1, n_max + 1) for r in range(0, n + 1)
    ))]
    for n, gap, sign in combinatorics.kreweras_gap_probe(min(n_max + 3, 12)):
        checks.append(probe(f'n={n}: 24·u^n_(n−2)/u^n_n − 3n² + 17n − 25 ≥ 0', sign >= 0, str(gap)))
    logger.info('kreweras: %d checks', len(checks))
    return checks
