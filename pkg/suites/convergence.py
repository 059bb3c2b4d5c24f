"""
Convergence of e_HK(A_{p,d}) to 1 + E_d/d! at rate p^{−2}.
"""
import json
import logging
import os
from fractions import Fraction

from lib import quadrics
from lib.errors import InconsistencyError
from lib.report import Check, probe
from suites import grid_check

logger = logging.getLogger(__name__)

MAXIMA_PATH = os.path.join(os.path.dirname(__file__), 'convergence_max.json')


def load_recorded_maxima(path=MAXIMA_PATH):
    """(p_max, {d: (max p²-gap, argmax)}) over odd p ≤ p_max."""
    with open(path) as f:
        data = json.load(f)
    maxima = {
        int(d): (Fraction(int(row['num']), int(row['den'])), row['argmax'])
        for d, row in data['maxima'].items()
    }
    return data['p_max'], maxima


def run(bounds):
    d_max = bounds.get('d_max', 8)
    p_max = bounds.get('p_max', 999)
    recorded_p_max, recorded = load_recorded_maxima()
    p_list = list(range(3, p_max + 1, 2))
    checks = []
    for d in range(1, d_max + 1):
        rows = quadrics.convergence_probe(d, p_list)
        constant = quadrics.ehk_function(d).reduced.is_constant
        if constant:
            checks.append(grid_check(f'd={d}: e_HK = limit', ((p, gap == 0) for p, gap in rows)))
        else:
            checks.append(grid_check(f'd={d}: e_HK > limit', ((p, gap > 0) for p, gap in rows)))
        try:
            constant_term = quadrics.asymptotic_constant(d)
            checks.append(Check(f'd={d}: e_HK − limit = O(p^-2)', True, f'p²-gap → {constant_term}'))
        except InconsistencyError as e:
            checks.append(Check(f'd={d}: e_HK − limit = O(p^-2)', False, str(e)))
        p_gap, observed = max(rows, key=lambda row: row[1])
        if d in recorded and p_max <= recorded_p_max:
            maximum, argmax = recorded[d]
            if argmax <= p_max:
                checks.append(Check(f'd={d}: max p²-gap = {maximum} at p={argmax}',
                                    observed == maximum, witness=(p_gap, observed)))
            else:
                checks.append(Check(f'd={d}: p²-gap ≤ recorded maximum {maximum}',
                                    observed <= maximum, witness=(p_gap, observed)))
        else:
            checks.append(probe(f'd={d}: largest p²-gap', True, f'{observed} at p={p_gap}'))
    logger.info('convergence: %d checks', len(checks))
    return checks
