"""
Lattice-Point Counting

Integer points of dilations of the Fibonacci polytope F_d, the extended
Fibonacci polytope E_d, and the closed regions of the cube cut by the
hyperplanes x_i + x_{i+1} = k. Counts are transfer-matrix DPs over the value
of the current coordinate with prefix-sum transitions (O(d·k) additions);
brute-force enumerators serve as oracles.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Optional

from lib import config
from lib.arith import Polynomial, interpolate
from lib.errors import CapExceededError, InputError

logger = logging.getLogger(__name__)

LE = '<='
GE = '>='

_PATTERN_ALIASES = {
    '<=': LE, '≤': LE, 'le': LE, 'l': LE,
    '>=': GE, '≥': GE, 'ge': GE, 'g': GE,
}


def normalize_pattern(pattern):
    """Accept '<=', '≤', 'le' (and the ≥ analogues); return a tuple of LE/GE."""
    out = []
    for sign in pattern:
        key = str(sign).strip().lower()
        if key not in _PATTERN_ALIASES:
            raise InputError(f'unknown inequality sign {sign!r}')
        out.append(_PATTERN_ALIASES[key])
    return tuple(out)


def all_patterns(d):
    return list(itertools.product((LE, GE), repeat=d - 1))


def _prefix(values):
    acc = [0]
    for v in values:
        acc.append(acc[-1] + v)
    return acc


# ── DP counts ─────────────────────────────────────────────────────────────────

def count_fibonacci(d, k):
    """|kF_d|: 0 ≤ x_i ≤ k and x_i + x_{i+1} ≤ k."""
    if d < 1 or k < 0:
        raise InputError('count_fibonacci needs d >= 1, k >= 0')
    ways = [1] * (k + 1)
    for _ in range(d - 1):
        pre = _prefix(ways)
        ways = [pre[k - y + 1] for y in range(k + 1)]
    return sum(ways)


def count_extended(d, k):
    """|kE_d|: |x_i| ≤ k and |x_i| + |x_{i+1}| ≤ k; |kE_0| = |kE_{-1}| = 1."""
    if k < 0:
        raise InputError('count_extended needs k >= 0')
    if d in (0, -1):
        return 1
    if d < -1:
        raise InputError('count_extended needs d >= -1')
    ways = [1] * (2 * k + 1)  # index x + k
    for _ in range(d - 1):
        pre = _prefix(ways)
        nxt = []
        for y in range(-k, k + 1):
            reach = k - abs(y)
            nxt.append(pre[reach + k + 1] - pre[-reach + k])
        ways = nxt
    return sum(ways)


def count_region(d, pattern, k):
    """Integer points of {x ∈ [0,k]^d : x_i + x_{i+1} ≤ k or ≥ k per pattern}."""
    pattern = normalize_pattern(pattern)
    if d < 1 or len(pattern) != d - 1:
        raise InputError(f'pattern length must be d-1 = {d - 1}')
    if k < 0:
        raise InputError('count_region needs k >= 0')
    ways = [1] * (k + 1)
    for sign in pattern:
        pre = _prefix(ways)
        if sign == LE:
            ways = [pre[k - y + 1] for y in range(k + 1)]
        else:
            ways = [pre[k + 1] - pre[k - y] for y in range(k + 1)]
    return sum(ways)


def ehrhart_region(d, pattern):
    pattern = normalize_pattern(pattern)
    return interpolate([(k, count_region(d, pattern, k)) for k in range(d + 1)])


def volume_of_region(d, pattern):
    """Euclidean volume of the closed region: leading coefficient of its Ehrhart polynomial."""
    return ehrhart_region(d, pattern).coefficient(d)


# ── Ehrhart polynomials ───────────────────────────────────────────────────────

def ehrhart_fibonacci(d):
    """P_d(k) = |kF_d| interpolated from k = 0..d."""
    return interpolate([(k, count_fibonacci(d, k)) for k in range(d + 1)])


def ehrhart_extended(d):
    """k ↦ |kE_d| interpolated from k = 0..d (constant 1 for d ∈ {−1, 0})."""
    if d in (0, -1):
        return Polynomial.constant(1)
    return interpolate([(k, count_extended(d, k)) for k in range(d + 1)])


# ── Brute-force oracles ───────────────────────────────────────────────────────

FAMILIES = ('fibonacci', 'extended', 'region')


@dataclass(frozen=True)
class LatticeCountQuery:
    family: str
    d: int
    k: int
    pattern: Optional[tuple] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(f'unknown polytope family {self.family!r}')
        if self.d < 1 or self.k < 0:
            raise InputError('query needs d >= 1, k >= 0')
        if self.family == 'region':
            if self.pattern is None:
                raise InputError('region queries need a pattern')
            pattern = normalize_pattern(self.pattern)
            if len(pattern) != self.d - 1:
                raise InputError(f'pattern length must be d-1 = {self.d - 1}')
            object.__setattr__(self, 'pattern', pattern)
        elif self.pattern is not None:
            raise InputError('pattern is only valid for the region family')


def _check_budget(size, budget):
    budget = config.BRUTE_BUDGET if budget is None else budget
    if size > budget:
        raise CapExceededError('tuples', size, budget, 'HKQ_BRUTE_BUDGET')


def lattice_points(query, budget=None):
    """Integer points of the queried polytope, enumerated lazily; the budget is checked up front."""
    d, k = query.d, query.k
    if query.family == 'extended':
        values = range(-k, k + 1)
        _check_budget((2 * k + 1) ** d, budget)
        ok = lambda x: all(abs(x[i]) + abs(x[i + 1]) <= k for i in range(d - 1))
    elif query.family == 'fibonacci':
        values = range(k + 1)
        _check_budget((k + 1) ** d, budget)
        ok = lambda x: all(x[i] + x[i + 1] <= k for i in range(d - 1))
    else:
        values = range(k + 1)
        _check_budget((k + 1) ** d, budget)
        pattern = query.pattern

        def ok(x):
            for i, sign in enumerate(pattern):
                s = x[i] + x[i + 1]
                if (sign == LE and s > k) or (sign == GE and s < k):
                    return False
            return True

    return (x for x in itertools.product(values, repeat=d) if ok(x))


def brute_force_count(query, budget=None):
    return sum(1 for _ in lattice_points(query, budget=budget))


def count_zigzag_order(d, k, budget=None):
    """Points of k·(order polytope of the zigzag poset): y_1 ≥ y_2 ≤ y_3 ≥ …"""
    _check_budget((k + 1) ** d, budget)

    def ok(y):
        for i in range(d - 1):
            if i % 2 == 0 and y[i] < y[i + 1]:
                return False
            if i % 2 == 1 and y[i] > y[i + 1]:
                return False
        return True

    return sum(1 for y in itertools.product(range(k + 1), repeat=d) if ok(y))


# ── Vertices & closed forms ───────────────────────────────────────────────────

def extended_vertex_count(d):
    """v(d) = 2v(d−2) + 2v(d−3) with v(1) = 2, v(2) = 4, v(3) = 6."""
    if d < 1:
        raise InputError('extended_vertex_count needs d >= 1')
    v = [None, 2, 4, 6]
    for n in range(4, d + 1):
        v.append(2 * v[n - 2] + 2 * v[n - 3])
    return v[d]


def brute_force_vertex_count(d):
    """Words over {−1, 0, 1}: no adjacent non-zeros, and no 0 can become ±1."""
    total = 0
    for word in itertools.product((-1, 0, 1), repeat=d):
        if any(word[i] and word[i + 1] for i in range(d - 1)):
            continue
        maximal = True
        for i, letter in enumerate(word):
            if letter:
                continue
            left = word[i - 1] if i > 0 else 0
            right = word[i + 1] if i < d - 1 else 0
            if not left and not right:
                maximal = False
                break
        total += maximal
    return total


def jacobsthal(d):
    """(2^{d+2} − (−1)^{d+2}) / 3 = |1·E_d|."""
    return (2 ** (d + 2) - (-1) ** (d + 2)) // 3


def fibonacci_number(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a
