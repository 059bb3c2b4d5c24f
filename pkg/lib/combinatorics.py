"""
Alternating-Permutation Combinatorics

Euler zigzag numbers, the swap statistic on alternating permutations (the
h*-vector of the Fibonacci polytope), Kreweras' alternating surjections,
and Chebikin's alternating descents.

Convention: a permutation σ of [d] is alternating iff σ(1) > σ(2) < σ(3) > …
(first step descending). Cache keys carry config.CONVENTION.
"""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from lib import config
from lib.arith import Polynomial, binomial_poly
from lib.errors import CapExceededError, InputError

logger = logging.getLogger(__name__)


# ── Euler zigzag numbers ──────────────────────────────────────────────────────

def zigzag(n_max):
    """E_0..E_{n_max} by the boustrophedon (Entringer / Seidel) triangle."""
    if n_max < 0:
        raise InputError('n_max must be non-negative')
    numbers = [1]
    row = [1]
    for n in range(1, n_max + 1):
        nxt = [0]
        for k in range(n):
            nxt.append(nxt[-1] + row[n - 1 - k])
        row = nxt
        numbers.append(row[-1])
    return numbers


def euler_number(n):
    return zigzag(n)[n]


# ── Alternating permutations ──────────────────────────────────────────────────

def is_alternating(perm):
    """σ(1) > σ(2) < σ(3) > … with 1-based positions."""
    for i in range(len(perm) - 1):
        if i % 2 == 0 and not perm[i] > perm[i + 1]:
            return False
        if i % 2 == 1 and not perm[i] < perm[i + 1]:
            return False
    return True


def alternating_permutations(d):
    """Yield the alternating permutations of [d] in lexicographic order."""
    perm = []
    used = [False] * (d + 2)

    def extend():
        t = len(perm)
        if t == d:
            yield tuple(perm)
            return
        if t == 0:
            candidates = range(1, d + 1)
        elif t % 2 == 1:
            candidates = range(1, perm[-1])
        else:
            candidates = range(perm[-1] + 1, d + 1)
        for v in candidates:
            if used[v]:
                continue
            used[v] = True
            perm.append(v)
            yield from extend()
            perm.pop()
            used[v] = False

    yield from extend()


def count_alternating_brute(n):
    """Filter all n! permutations; the independent oracle for zigzag()."""
    return sum(1 for p in itertools.permutations(range(1, n + 1)) if is_alternating(p))


def swap(perm):
    """Number of i < n with σ⁻¹(i) < σ⁻¹(i+1) − 1."""
    n = len(perm)
    pos = [0] * (n + 1)
    for idx, v in enumerate(perm, start=1):
        pos[v] = idx
    return sum(1 for i in range(1, n) if pos[i] < pos[i + 1] - 1)


@dataclass(frozen=True)
class SwapTable:
    """s[m] = number of alternating permutations of [d] with swap m."""
    d: int
    s: tuple

    @property
    def total(self):
        return sum(self.s)

    @property
    def is_palindromic(self):
        return self.s == tuple(reversed(self.s))

    @property
    def first_moment(self):
        return sum(m * c for m, c in enumerate(self.s))

    def at(self, m):
        return self.s[m] if 0 <= m < len(self.s) else 0


def _check_cap(what, value, cap, env_var):
    if value > cap:
        raise CapExceededError(what, value, cap, env_var)


def swap_table(d, cap=None):
    """Histogram of the swap statistic over alternating permutations of [d]."""
    if d < 1:
        raise InputError('swap_table needs d >= 1')
    cap = config.SWAP_CAP if cap is None else cap
    _check_cap('d', d, cap, 'HKQ_SWAP_CAP')
    return _swap_table(d)


@lru_cache(maxsize=None)
def _swap_table(d):
    # d = 1 has the single permutation (1) with swap 0
    hist = [0] * max(d - 1, 1)
    count = 0
    for perm in alternating_permutations(d):
        hist[swap(perm)] += 1
        count += 1
    logger.debug('swap table d=%d: %d alternating permutations', d, count)
    return SwapTable(d, tuple(hist))


def coeff_sum_binom(d, i, cap=None):
    """Σ_m C(m, i)·s_d(m)."""
    table = swap_table(d, cap=cap)
    return sum(comb(m, i) * c for m, c in enumerate(table.s))


def ehrhart_from_swaps(d, cap=None):
    """P_d(k) = Σ_m s_d(m)·C(k + d − m, d) as a polynomial in k."""
    table = swap_table(d, cap=cap)
    result = Polynomial()
    for m, c in enumerate(table.s):
        if c:
            result = result + binomial_poly(d - m, d) * c
    return result


def ehrhart_count_from_swaps(d, k, cap=None):
    table = swap_table(d, cap=cap)
    return sum(c * comb(k + d - m, d) for m, c in enumerate(table.s))


def ehrhart_from_binomial_sums(d, k, cap=None):
    """Alternating-sign form Σ_i (−1)^i C(k+d−i, d−i)·Σ_m C(m,i) s_d(m)."""
    table = swap_table(d, cap=cap)
    total = 0
    for i in range(len(table.s)):
        weight = sum(comb(m, i) * c for m, c in enumerate(table.s))
        total += (-1) ** i * comb(k + d - i, d - i) * weight
    return total


# ── Swap-table identities and probes ──────────────────────────────────────────

def facet_relation_holds(table):
    """Σ m·s_d(m) = E_d·(d/2 − 1), d ≥ 2."""
    if table.d < 2:
        return True
    return Fraction(table.first_moment) == table.total * (Fraction(table.d, 2) - 1)


def even_pairing_identity(d, cap=None):
    """Σ C(m,2) s_d(m) = C(c,2)·E_d + Σ_{a=1..c} a²·s_d(c+a), c = d/2 − 1."""
    if d % 2:
        raise InputError('even_pairing_identity needs even d')
    table = swap_table(d, cap=cap)
    c = d // 2 - 1
    lhs = coeff_sum_binom(d, 2, cap=cap)
    rhs = comb(c, 2) * table.total + sum(a * a * table.at(c + a) for a in range(1, c + 1))
    return lhs == rhs


def odd_pairing_identity(d, cap=None):
    """Σ C(m,2) s_d(m) = ((d−3)²/8)·E_d + ½ Σ (m−c)(m−c−1)·s_d(m), c = (d−3)/2."""
    if d % 2 == 0 or d < 3:
        raise InputError('odd_pairing_identity needs odd d >= 3')
    table = swap_table(d, cap=cap)
    c = (d - 3) // 2
    lhs = coeff_sum_binom(d, 2, cap=cap)
    rhs = Fraction((d - 3) ** 2, 8) * table.total
    rhs += Fraction(1, 2) * sum((m - c) * (m - c - 1) * s for m, s in enumerate(table.s))
    return lhs == rhs


def question_probe(d_max, cap=None):
    """Rows (d, s_{d+1}(1), s_d(1) + s_{d−1}(1) + d − 1, holds) for 3 ≤ d < d_max."""
    rows = []
    for d in range(3, d_max):
        lhs = swap_table(d + 1, cap=cap).at(1)
        rhs = swap_table(d, cap=cap).at(1) + swap_table(d - 1, cap=cap).at(1) + d - 1
        rows.append((d, lhs, rhs, lhs == rhs))
    return rows


def kreweras_gap(n, cap=None):
    """24·u^n_{n−2}/u^n_n − 3n² + 17n − 25, with u read off the swap table."""
    u_top = swap_table(n, cap=cap).total
    u_two = coeff_sum_binom(n, 2, cap=cap)
    return Fraction(24 * u_two, u_top) - 3 * n * n + 17 * n - 25


def kreweras_gap_probe(n_max, cap=None):
    """Rows (n, gap, sign) for 2 ≤ n ≤ n_max."""
    rows = []
    for n in range(2, n_max + 1):
        gap = kreweras_gap(n, cap=cap)
        rows.append((n, gap, (gap > 0) - (gap < 0)))
    return rows


# ── Kreweras alternating surjections ──────────────────────────────────────────

def kreweras_u(n, r, cap=None):
    """Surjections f: [n] → [r] with f(1) > f(2) < f(3) > …, by enumeration."""
    cap = config.KREWERAS_CAP if cap is None else cap
    _check_cap('n', n, cap, 'HKQ_KREWERAS_CAP')
    if r < 1 or r > n:
        return 0

    counts = [0] * (r + 1)
    total = 0

    def walk(t, prev, distinct):
        nonlocal total
        if r - distinct > n - t:
            return
        if t == n:
            total += 1
            return
        if t == 0:
            candidates = range(1, r + 1)
        elif t % 2 == 1:
            candidates = range(1, prev)
        else:
            candidates = range(prev + 1, r + 1)
        for v in candidates:
            fresh = counts[v] == 0
            counts[v] += 1
            walk(t + 1, v, distinct + fresh)
            counts[v] -= 1

    walk(0, 0, 0)
    return total


# ── Alternating descents ──────────────────────────────────────────────────────

@dataclass(frozen=True)
class AltDescentTable:
    """a[k] = A(n, k), permutations of [n] with k alternating descents."""
    n: int
    a: tuple


def alternating_descents(perm):
    """Positions i with (i odd and π(i) > π(i+1)) or (i even and π(i) < π(i+1))."""
    count = 0
    for j in range(len(perm) - 1):
        if j % 2 == 0:
            count += perm[j] > perm[j + 1]
        else:
            count += perm[j] < perm[j + 1]
    return count


def alt_descent_table(n, cap=None):
    if n < 1:
        raise InputError('alt_descent_table needs n >= 1')
    cap = config.DESCENT_CAP if cap is None else cap
    _check_cap('n', n, cap, 'HKQ_DESCENT_CAP')
    return _alt_descent_table(n)


@lru_cache(maxsize=None)
def _alt_descent_table(n):
    hist = [0] * n
    for perm in itertools.permutations(range(1, n + 1)):
        hist[alternating_descents(perm)] += 1
    logger.debug('alternating descents n=%d: %d permutations', n, factorial(n))
    return AltDescentTable(n, tuple(hist))


def alt_eulerian_poly(n, cap=None):
    """A_n(x) = Σ_k A(n, k) x^k."""
    return Polynomial(alt_descent_table(n, cap=cap).a)
