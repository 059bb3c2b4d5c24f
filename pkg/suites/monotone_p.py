"""
e_HK(A_{p,d}) along odd p. Any increase fails the suite; where the values
are constant or strictly falling is only reported.
"""
import logging

from lib import quadrics
from lib.report import Check, probe

logger = logging.getLogger(__name__)


def run(bounds):
    d_max = bounds.get('d_max', 12)
    p_max = bounds.get('p_max', 199)
    checks = []
    for d in range(1, d_max + 1):
        report = quadrics.scan_monotone_p(d, p_max)
        checks.append(Check(f'd={d}: non-increasing over odd p ≤ {p_max}',
                            report.non_increasing, witness=report.witness))
        if report.constant:
            shape = f'constant {report.values[0][1]}'
        elif report.strictly_decreasing:
            shape = 'strictly decreasing'
        else:
            flat = [p for (p, _), drop in zip(report.values, report.drops) if not drop]
            shape = f'flat after p = {flat}'
        checks.append(probe(f'd={d}: shape', report.strictly_decreasing or report.constant, shape))
    logger.info('monotone-p: %d checks', len(checks))
    return checks
