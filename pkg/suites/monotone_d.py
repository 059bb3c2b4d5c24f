"""
Strict decrease of e_HK(A_{p,d}) in d, and the two lattice-point
inequalities that drive it.
"""
import logging

from lib import quadrics
from lib.report import Check
from suites import grid_check, odd_primes

logger = logging.getLogger(__name__)


def run(bounds):
    d_max = bounds.get('d_max', 12)
    p_max = bounds.get('p_max', 31)
    checks = []
    for p in odd_primes(p_max):
        report = quadrics.scan_monotone_d(p, d_max)
        checks.append(Check(f'p={p}: e_HK strictly decreasing for d ≤ {d_max}',
                            report.strictly_decreasing, witness=report.witness))
    checks.append(grid_check('|bF_{d+1}| < (b+1)|bF_d| and |aE_{d+1}| < (2a+1)|aE_d|', (
        ((p, row.name, row.d, row.lhs, row.rhs), row.holds)
        for p in odd_primes(p_max) for row in quadrics.monotone_d_inequalities(p, d_max)
    )))
    logger.info('monotone-d: %d checks', len(checks))
    return checks
