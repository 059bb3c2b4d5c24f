"""
Structured Matrices

Entry rules for the banded families T_s, N_s, Z_s, Q(q, s) (size 2s + 1) and
M(n, p) (size p), plus (1,1) entries of their powers. Powers are never
materialized: the kernel applies the matrix to a vector exponent times,
summing each row's bands with prefix sums.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from lib import repring
from lib.errors import InputError

logger = logging.getLogger(__name__)

KINDS = ('T', 'N', 'Z', 'Q', 'M')


@dataclass(frozen=True)
class StructuredMatrixSpec:
    kind: str
    a_or_k: int
    q: Optional[int] = None
    n: Optional[int] = None
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f'unknown matrix kind {self.kind!r}')
        if self.kind == 'M':
            if self.n is None or self.p is None:
                raise InputError('M matrices need n and p')
            repring.frobenius_factor(self.p, self.n)
            object.__setattr__(self, 'a_or_k', self.p // self.n)
        elif self.a_or_k < 1:
            raise InputError('half-size parameter must be positive')
        if self.kind == 'Q':
            if self.q is None or self.q < 0:
                raise InputError('Q matrices need q >= 0')
        elif self.kind == 'T':
            object.__setattr__(self, 'q', 2)
        elif self.kind == 'N':
            object.__setattr__(self, 'q', 0)

    @classmethod
    def T(cls, s):
        return cls('T', s)

    @classmethod
    def N(cls, s):
        return cls('N', s)

    @classmethod
    def Z(cls, s):
        return cls('Z', s)

    @classmethod
    def Q(cls, q, s):
        return cls('Q', s, q=q)

    @classmethod
    def M(cls, n, p):
        return cls('M', 0, n=n, p=p)

    @property
    def size(self):
        return self.p if self.kind == 'M' else 2 * self.a_or_k + 1

    def __str__(self):
        if self.kind == 'M':
            return f'M(n={self.n}, p={self.p})'
        if self.kind == 'Q':
            return f'Q(q={self.q}, k={self.a_or_k})'
        return f'{self.kind}_{self.a_or_k}'


@lru_cache(maxsize=64)
def _m_rows(n, p):
    rows = repring.mult_matrix(repring.frobenius_factor(p, n))
    return tuple(tuple(abs(x) for x in row) for row in rows)


def entry(spec, i, j):
    """1-based entry of the matrix described by spec."""
    size = spec.size
    if not (1 <= i <= size and 1 <= j <= size):
        raise InputError(f'entry ({i}, {j}) out of range for size {size}')
    if spec.kind == 'M':
        return _m_rows(spec.n, spec.p)[i - 1][j - 1]
    s = spec.a_or_k
    c = s + 1
    inside = abs(i - c) + abs(j - c) <= s
    if spec.kind == 'Z':
        return 0 if inside else 1
    if i + j <= s + 1 or i + j >= 3 * s + 3:
        return spec.q
    return 1 if inside else 0


def dense(spec):
    """The full matrix as a tuple of rows (small sizes only)."""
    n = spec.size
    return tuple(tuple(entry(spec, i, j) for j in range(1, n + 1)) for i in range(1, n + 1))


# ── Matrix–vector kernel ──────────────────────────────────────────────────────

def _apply_banded(spec, vec):
    s = spec.a_or_k
    size = 2 * s + 1
    c = s + 1
    pre = [0]
    for x in vec:
        pre.append(pre[-1] + x)

    def span(lo, hi):
        # 1-based inclusive column range
        lo, hi = max(lo, 1), min(hi, size)
        return pre[hi] - pre[lo - 1] if lo <= hi else 0

    out = []
    for i in range(1, size + 1):
        reach = s - abs(i - c)
        rhombus = span(c - reach, c + reach) if reach >= 0 else 0
        if spec.kind == 'Z':
            out.append(pre[size] - rhombus)
            continue
        total = rhombus
        if spec.q:
            total += spec.q * (span(1, s + 1 - i) + span(3 * s + 3 - i, size))
        out.append(total)
    return out


def _apply_dense(rows, vec):
    return [sum(a * x for a, x in zip(row, vec) if a) for row in rows]


def apply(spec, vec):
    if spec.kind == 'M':
        return _apply_dense(_m_rows(spec.n, spec.p), vec)
    return _apply_banded(spec, vec)


def corner_power(spec, exponent):
    """[A^exponent]_{(1,1)} by exponent matrix–vector products on e_1."""
    if exponent < 1:
        raise InputError('exponent must be >= 1')
    vec = [0] * spec.size
    vec[0] = 1
    for _ in range(exponent):
        vec = apply(spec, vec)
    return vec[0]


def hanmonsky_colength_matrix(p, exponents):
    """(1,1) entry of M_{n_0}·M_{n_1}·…·M_{n_d}."""
    if not exponents:
        raise InputError('hanmonsky_colength_matrix needs at least one exponent')
    specs = [StructuredMatrixSpec.M(n, p) for n in exponents]
    vec = [0] * p
    vec[0] = 1
    for spec in reversed(specs):
        vec = apply(spec, vec)
    logger.debug('colength matrix p=%d exponents=%s: %d', p, exponents, vec[0])
    return vec[0]
