"""
Representation Ring

Dense λ-basis arithmetic in the Han–Monsky ring Γ for an odd prime p.
λ_i·λ_j (i ≤ j) is the run λ_{j−i} + … + λ_{j+i} when i + j ≤ p − 1, and
folds to λ_{p−1−j}·λ_{p−1−i} otherwise; both cases are the contiguous run
from |i − j| to min(i + j, 2p − 2 − i − j). D reads the λ_0 coefficient.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import isprime

from lib.errors import InconsistencyError, InputError

logger = logging.getLogger(__name__)


def _check_prime(p):
    if not isinstance(p, int) or p < 3 or not isprime(p):
        raise InputError(f'p must be an odd prime, got {p!r}')


@dataclass(frozen=True)
class GammaElement:
    """Σ coeffs[i]·λ_i, exactly p integer coefficients."""
    p: int
    coeffs: tuple

    def __post_init__(self):
        _check_prime(self.p)
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.p:
            raise InputError(f'expected {self.p} coefficients, got {len(coeffs)}')
        object.__setattr__(self, 'coeffs', coeffs)

    @classmethod
    def one(cls, p):
        return lam(p, 0)

    def _same_ring(self, other):
        if not isinstance(other, GammaElement):
            return NotImplemented
        if other.p != self.p:
            raise InputError(f'mismatched p: {self.p} vs {other.p}')
        return other

    def __add__(self, other):
        if self._same_ring(other) is NotImplemented:
            return NotImplemented
        return GammaElement(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return GammaElement(self.p, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if self._same_ring(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GammaElement(self.p, tuple(other * c for c in self.coeffs))
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, e):
        return power(self, e)

    def __str__(self):
        terms = [f'{c}*λ{i}' for i, c in enumerate(self.coeffs) if c]
        return ' + '.join(terms).replace('+ -', '- ') if terms else '0'


# ── Basis elements ────────────────────────────────────────────────────────────

def lam(p, i):
    _check_prime(p)
    if not 0 <= i < p:
        raise InputError(f'λ index {i} out of range 0..{p - 1}')
    coeffs = [0] * p
    coeffs[i] = 1
    return GammaElement(p, tuple(coeffs))


def delta(p, i):
    """δ_i = λ_0 − λ_1 + … + (−1)^{i−1} λ_{i−1}, 1 ≤ i ≤ p."""
    _check_prime(p)
    if not 1 <= i <= p:
        raise InputError(f'δ index {i} out of range 1..{p}')
    coeffs = [(-1) ** k if k < i else 0 for k in range(p)]
    return GammaElement(p, tuple(coeffs))


def _run(p, i, j):
    return abs(i - j), min(i + j, 2 * p - 2 - i - j)


def lambda_mul(p, i, j):
    _check_prime(p)
    if not (0 <= i < p and 0 <= j < p):
        raise InputError(f'λ indices ({i}, {j}) out of range 0..{p - 1}')
    lo, hi = _run(p, i, j)
    coeffs = [1 if lo <= k <= hi else 0 for k in range(p)]
    return GammaElement(p, tuple(coeffs))


# ── Products ──────────────────────────────────────────────────────────────────

def multiply(u, v):
    if u.p != v.p:
        raise InputError(f'mismatched p: {u.p} vs {v.p}')
    p = u.p
    # every λ_i·λ_j is a contiguous run of ones: accumulate in a difference array
    diff = [0] * (p + 1)
    for i, a in enumerate(u.coeffs):
        if not a:
            continue
        for j, b in enumerate(v.coeffs):
            if not b:
                continue
            lo, hi = _run(p, i, j)
            diff[lo] += a * b
            diff[hi + 1] -= a * b
    coeffs = []
    acc = 0
    for k in range(p):
        acc += diff[k]
        coeffs.append(acc)
    return GammaElement(p, tuple(coeffs))


def power(u, e):
    if e < 0:
        raise InputError('negative power in Γ')
    result = GammaElement.one(u.p)
    for _ in range(e):
        result = multiply(result, u)
    return result


def D(u):
    """Coefficient of λ_0."""
    return u.coeffs[0]


def delta_coordinates(u):
    """Coordinates b_1..b_p with u = Σ b_m δ_m (inverse of the δ ↔ λ change)."""
    c = list(u.coeffs) + [0]
    return tuple((-1) ** (m - 1) * (c[m - 1] + c[m]) for m in range(1, u.p + 1))


def delta_coordinate_sum(u):
    return sum(delta_coordinates(u))


def mult_matrix(u):
    """Rows of the matrix of multiplication by u; column j holds u·λ_j."""
    columns = [multiply(u, lam(u.p, j)).coeffs for j in range(u.p)]
    return tuple(tuple(col[i] for col in columns) for i in range(u.p))


# ── Colengths & the quadric formula ───────────────────────────────────────────

def frobenius_factor(p, n):
    """(n − r)·δ_a + r·δ_{a+1} with p = a·n + r, for 2 ≤ n ≤ p."""
    if not 2 <= n <= p:
        raise InputError(f'exponent {n} outside [2, {p}]: general Frobenius powers out of scope')
    a, r = divmod(p, n)
    factor = delta(p, a) * (n - r)
    if r:
        factor = factor + delta(p, a + 1) * r
    return factor


def diag_colength(p, exponents):
    """dim k[x_0..x_d]/(x_0^{n_0}, …, x_d^{n_d}, x_i^p), read off as D of the factor product."""
    _check_prime(p)
    if not exponents:
        raise InputError('diag_colength needs at least one exponent')
    product = GammaElement.one(p)
    for n in exponents:
        product = multiply(product, frobenius_factor(p, n))
    return D(product)


@lru_cache(maxsize=None)
def ehk_quadric_repring(p, d):
    _check_prime(p)
    if d < 1:
        raise InputError('d must be >= 1')
    a = (p - 1) // 2
    top = D(power(delta(p, a) + delta(p, a + 1), d + 1)) - p ** d

    signed = p ** d - (-1) ** (a * (d + 1)) * D(power(delta(p, a + 1) - delta(p, a), d + 1))
    plain = p ** d - D(power(lam(p, a), d + 1))
    if signed != plain:
        raise InconsistencyError(f'signed and unsigned denominators differ at p={p}, d={d}')
    if plain == 0:
        raise InconsistencyError(f'zero denominator at p={p}, d={d}')

    logger.debug('repring p=%d d=%d: %d / %d', p, d, top, plain)
    return 1 + Fraction(top, plain)
