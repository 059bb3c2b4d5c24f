"""
Exponent parities of the unreduced numerator and denominator of e_HK(p).
"""
import logging

from lib import quadrics
from lib.report import probe
from suites import grid_check

logger = logging.getLogger(__name__)


def run(bounds):
    d_max = bounds.get('d_max', 8)
    checks = [grid_check('unreduced degrees equal d', (
        (d, quadrics.ehk_function(d).unreduced_num.degree == d
         and quadrics.ehk_function(d).unreduced_den.degree == d)
        for d in range(1, d_max + 1)
    ))]
    for d in range(1, d_max + 1):
        pattern = quadrics.parity_report(d)
        checks.append(probe(f'd={d}: only powers p^i with i ≡ d (mod 2)', quadrics.parity_check(d),
                            f"num {pattern['num']}, den {pattern['den']}"))
    logger.info('parity: %d checks', len(checks))
    return checks
