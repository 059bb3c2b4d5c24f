"""
Hilbert–Kunz Multiplicity of Quadrics

e_HK(A_{p,d}) for the quadric x_0² + … + x_d² over F_p by three routes:

    repring   1 + (D((δ_a+δ_{a+1})^{d+1}) − p^d) / (p^d − D(λ_a^{d+1}))
    matrix    1 + ([T_a^{d+1}]_{11} − p^d) / (p^d − [N_a^{d+1}]_{11})
    ehrhart   1 + 2^d·|(a−1)F_d| / ((2a+1)^d − |aE_{d−2}|)

with a = (p − 1)/2. The Ehrhart form turns e_HK into a rational function of
p, which the scanners below evaluate.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Optional

from lib import combinatorics, matrices, polytopes, repring
from lib.arith import Polynomial, RationalFunction, compose, interpolate, reduce
from lib.errors import InconsistencyError, InputError

logger = logging.getLogger(__name__)

METHODS = ('repring', 'matrix', 'ehrhart')


def _check_odd(p, d):
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        raise InputError(f'p must be an odd integer >= 3, got {p!r}')
    if not isinstance(d, int) or d < 1:
        raise InputError(f'd must be an integer >= 1, got {d!r}')


# ── Three routes ──────────────────────────────────────────────────────────────

@lru_cache(maxsize=None)
def ehk_matrix(p, d):
    _check_odd(p, d)
    a = (p - 1) // 2
    top = matrices.corner_power(matrices.StructuredMatrixSpec.T(a), d + 1) - p ** d
    bottom = p ** d - matrices.corner_power(matrices.StructuredMatrixSpec.N(a), d + 1)
    if bottom == 0:
        raise InconsistencyError(f'zero denominator at p={p}, d={d}')
    return 1 + Fraction(top, bottom)


@lru_cache(maxsize=None)
def ehk_ehrhart(p, d):
    _check_odd(p, d)
    a = (p - 1) // 2
    top = 2 ** d * polytopes.count_fibonacci(d, a - 1)
    bottom = p ** d - polytopes.count_extended(d - 2, a)
    if bottom == 0:
        raise InconsistencyError(f'zero denominator at p={p}, d={d}')
    return 1 + Fraction(top, bottom)


def ehk_repring(p, d):
    _check_odd(p, d)
    return repring.ehk_quadric_repring(p, d)


_ROUTES = {
    'repring': ehk_repring,
    'matrix': ehk_matrix,
    'ehrhart': ehk_ehrhart,
}


@dataclass(frozen=True)
class EhkResult:
    p: int
    d: int
    value: Fraction
    method: str


def compute(p, d, method):
    if method not in _ROUTES:
        raise InputError(f'unknown method {method!r}')
    value = _ROUTES[method](p, d)
    if value <= 1:
        raise InconsistencyError(f'e_HK <= 1 at p={p}, d={d} via {method}')
    return EhkResult(p, d, value, method)


# ── The rational function in p ────────────────────────────────────────────────

@dataclass(frozen=True)
class EhkFunction:
    """e_HK as a reduced function of p; the degree-d unreduced pair is kept alongside."""
    d: int
    reduced: RationalFunction
    unreduced_num: Polynomial = field(compare=False)
    unreduced_den: Polynomial = field(compare=False)

    def evaluate(self, p):
        return self.reduced.evaluate(p)


def _matrix_samples(d):
    p_points, q_points = [], []
    for a in range(1, d + 2):
        t = matrices.corner_power(matrices.StructuredMatrixSpec.T(a), d + 1)
        n = matrices.corner_power(matrices.StructuredMatrixSpec.N(a), d + 1)
        p_points.append((a - 1, Fraction(t - (2 * a + 1) ** d, 2 ** d)))
        q_points.append((a, n))
    return interpolate(p_points), interpolate(q_points)


def ehk_function(d, source='ehrhart'):
    if not isinstance(d, int) or d < 1:
        raise InputError(f'd must be an integer >= 1, got {d!r}')
    if source not in ('ehrhart', 'matrix'):
        raise InputError(f'unknown source {source!r}')
    return _ehk_function(d, source)


@lru_cache(maxsize=None)
def _ehk_function(d, source):
    if source == 'ehrhart':
        fib, ext = polytopes.ehrhart_fibonacci(d), polytopes.ehrhart_extended(d - 2)
    else:
        fib, ext = _matrix_samples(d)
    if ext.degree > max(d - 2, 0):
        raise InconsistencyError(f'extended Ehrhart polynomial of degree {ext.degree} for d={d}')

    p = Polynomial.x()
    num = compose(fib, Polynomial.linear(Fraction(1, 2), Fraction(-3, 2))) * 2 ** d
    den = p ** d - compose(ext, Polynomial.linear(Fraction(1, 2), Fraction(-1, 2)))
    if num.degree != d or den.degree != d:
        raise InconsistencyError(f'unreduced degrees ({num.degree}, {den.degree}) for d={d}')

    reduced = reduce(num + den, den)
    logger.debug('e_HK function d=%d via %s: %s', d, source, reduced)
    return EhkFunction(d, reduced, num, den)


def gm_limit(d):
    """1 + E_d/d!, the p → ∞ limit."""
    if d < 1:
        raise InputError('d must be >= 1')
    return 1 + Fraction(combinatorics.euler_number(d), factorial(d))


def asymptotic_constant(d):
    """lim p²·(e_HK − gm_limit(d)); raises if the gap is not O(p^{−2})."""
    fn = ehk_function(d)
    gap = fn.unreduced_num + fn.unreduced_den - fn.unreduced_den * gm_limit(d)
    if gap.degree > d - 2:
        raise InconsistencyError(f'e_HK − limit decays slower than p^-2 at d={d}')
    return gap.coefficient(d - 2) / fn.unreduced_den.leading_coefficient


def convergence_probe(d, p_list):
    """Rows (p, (e_HK − gm_limit)·p²), exact."""
    limit = gm_limit(d)
    rows = []
    for p in p_list:
        rows.append((p, (ehk_ehrhart(p, d) - limit) * p * p))
    return rows


# ── Scans ─────────────────────────────────────────────────────────────────────

@dataclass
class ScanReport:
    """Values along one axis, with where they strictly drop."""
    axis: str
    fixed: int
    values: list
    drops: list
    witness: Optional[tuple] = None

    @property
    def non_increasing(self):
        return all(b <= a for (_, a), (_, b) in zip(self.values, self.values[1:]))

    @property
    def strictly_decreasing(self):
        return all(self.drops)

    @property
    def constant(self):
        return len({v for _, v in self.values}) <= 1


def _scan(axis, fixed, points):
    drops = [b < a for (_, a), (_, b) in zip(points, points[1:])]
    witness = None
    for ((x, a), (y, b)) in zip(points, points[1:]):
        if b > a:
            witness = (x, a, y, b)
            break
    return ScanReport(axis, fixed, points, drops, witness)


def scan_monotone_d(p, d_max):
    """e_HK(A_{p,d}) for d = 1..d_max, expected strictly decreasing."""
    _check_odd(p, 1)
    report = _scan('d', p, [(d, ehk_ehrhart(p, d)) for d in range(1, d_max + 1)])
    if report.witness is None and not report.strictly_decreasing:
        i = report.drops.index(False)
        (x, a), (y, b) = report.values[i], report.values[i + 1]
        report.witness = (x, a, y, b)
    return report


def scan_monotone_p(d, p_max):
    """e_HK(A_{p,d}) over odd p in [3, p_max]; non-increase is reported, strictness is not required."""
    return _scan('p', d, [(p, ehk_ehrhart(p, d)) for p in range(3, p_max + 1, 2)])


# ── Structural checks ─────────────────────────────────────────────────────────

def parity_report(d):
    fn = ehk_function(d)
    return {
        'num': sorted(fn.unreduced_num.parity_pattern()),
        'den': sorted(fn.unreduced_den.parity_pattern()),
    }


def parity_check(d):
    """True iff both unreduced polynomials only carry powers of p ≡ d (mod 2)."""
    report = parity_report(d)
    return report['num'] == [d % 2] and report['den'] == [d % 2]


@dataclass(frozen=True)
class Comparison:
    name: str
    expected: object
    actual: object

    @property
    def ok(self):
        return self.expected == self.actual


def ehrhart_coeff_check(d):
    """The three leading coefficients of P_d, and the vanishing x^{d−1} term of P_d(x − 3/2)."""
    if d < 3:
        raise InputError('ehrhart_coeff_check needs d >= 3')
    table = combinatorics.swap_table(d)
    euler = table.total
    poly = polytopes.ehrhart_fibonacci(d)

    # k^{d−2}: with u = (d+1)/2 − m, Σ_m s(m)·[d(d−1)/2·u² − d(d²−1)/24] / d!
    b2 = combinatorics.coeff_sum_binom(d, 2)
    m1 = euler * (Fraction(d, 2) - 1)
    u2 = 2 * b2 - d * m1 + Fraction((d + 1) ** 2, 4) * euler
    third = (Fraction(d * (d - 1), 2) * u2 - Fraction(d * (d * d - 1), 24) * euler) / factorial(d)

    shifted = compose(poly, Polynomial.linear(1, Fraction(-3, 2)))
    return [
        Comparison('leading', Fraction(euler, factorial(d)), poly.coefficient(d)),
        Comparison('second', Fraction(3, 2) * Fraction(euler, factorial(d - 1)), poly.coefficient(d - 1)),
        Comparison('third', third, poly.coefficient(d - 2)),
        Comparison('shifted', Fraction(0), shifted.coefficient(d - 1)),
    ]


def ehrhart_positivity(d):
    poly = polytopes.ehrhart_fibonacci(d)
    return poly.degree == d and all(c > 0 for c in poly.coeffs)


@dataclass(frozen=True)
class Inequality:
    name: str
    d: int
    lhs: int
    rhs: int

    @property
    def holds(self):
        return self.lhs < self.rhs


def monotone_d_inequalities(p, d_max):
    """|bF_{d+1}| < (b+1)|bF_d| with b = a − 1, and |aE_{d+1}| < (2a+1)|aE_d|.

    The Fibonacci inequality degenerates to equality at b = 0, so it is only
    listed for p ≥ 5.
    """
    _check_odd(p, 1)
    a = (p - 1) // 2
    rows = []
    for d in range(1, d_max):
        if a >= 2:
            b = a - 1
            rows.append(Inequality('fibonacci', d, polytopes.count_fibonacci(d + 1, b),
                                   (b + 1) * polytopes.count_fibonacci(d, b)))
        rows.append(Inequality('extended', d, polytopes.count_extended(d + 1, a),
                               (2 * a + 1) * polytopes.count_extended(d, a)))
    return rows
