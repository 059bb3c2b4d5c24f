"""
Corner Words & the Q(q, k) Leading-Coefficient Law

Words over six letters, each letter read as a transition between an upper
state U and a lower state B:

    u: U→U    c^+: U→U    c_+: U→B
    b: B→B    c_−: B→B    c^−: B→U

A word is valid when consecutive letters chain (out-state of one is the
in-state of the next), the first letter leaves from U and the last letter
lands in U. φ sends b, u to g and the four c letters to l.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from lib import combinatorics, config, matrices, polytopes
from lib.arith import interpolate
from lib.errors import CapExceededError, InconsistencyError, InputError

logger = logging.getLogger(__name__)

B, U = 'B', 'U'

# rendering of b, u, c^+, c^−, c_+, c_− in lexicographic order
LETTERS = ('b', 'u', 'c_plus_up', 'c_minus_up', 'c_plus_down', 'c_minus_down')

_TRANSITIONS = {
    'b': (B, B),
    'u': (U, U),
    'c_plus_up': (U, U),
    'c_minus_up': (B, U),
    'c_plus_down': (U, B),
    'c_minus_down': (B, B),
}

_PROJECTION = {'b': 'g', 'u': 'g'}


@dataclass(frozen=True)
class CornerWord:
    letters: tuple

    def __post_init__(self):
        letters = tuple(self.letters)
        for letter in letters:
            if letter not in _TRANSITIONS:
                raise InputError(f'unknown corner letter {letter!r}')
        object.__setattr__(self, 'letters', letters)

    @property
    def is_valid(self):
        state = U
        for letter in self.letters:
            start, end = _TRANSITIONS[letter]
            if start != state:
                return False
            state = end
        return bool(self.letters) and state == U

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return ' '.join(self.letters)


@dataclass(frozen=True)
class GLWord:
    letters: str

    def __post_init__(self):
        if set(self.letters) - {'g', 'l'}:
            raise InputError(f'GL words use only g and l, got {self.letters!r}')

    @property
    def l_count(self):
        return self.letters.count('l')

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return self.letters


def _check_length(n, cap):
    cap = config.WORD_CAP if cap is None else cap
    if n > cap:
        raise CapExceededError('n', n, cap, 'HKQ_WORD_CAP')


def _walk(pattern):
    """Valid words whose i-th letter is drawn from pattern[i], in LETTERS order."""
    n = len(pattern)
    word = []

    def extend(state):
        if len(word) == n:
            if state == U:
                yield CornerWord(tuple(word))
            return
        for letter in pattern[len(word)]:
            start, end = _TRANSITIONS[letter]
            if start != state:
                continue
            word.append(letter)
            yield from extend(end)
            word.pop()

    yield from extend(U)


def enumerate_words(n, cap=None):
    if n < 1:
        raise InputError('word length must be >= 1')
    _check_length(n, cap)
    return list(_walk([LETTERS] * n))


def signature(word):
    """Number of c letters."""
    return sum(1 for letter in word.letters if letter.startswith('c_'))


def phi(word):
    return GLWord(''.join(_PROJECTION.get(letter, 'l') for letter in word.letters))


def fiber_count(v, cap=None):
    if len(v) < 1:
        raise InputError('word length must be >= 1')
    _check_length(len(v), cap)
    lifts = {
        'g': tuple(x for x in LETTERS if x in _PROJECTION),
        'l': tuple(x for x in LETTERS if x not in _PROJECTION),
    }
    return sum(1 for w in _walk([lifts[ch] for ch in v.letters]) if phi(w) == v)


def fiber_histogram(n, cap=None):
    """φ-fiber sizes of every GL word of length n, from one pass over W_n."""
    return Counter(phi(w).letters for w in enumerate_words(n, cap=cap))


def expected_fiber(v):
    return 2 ** max(0, v.l_count - 1)


# ── Leading coefficient of k ↦ [Q(q,k)^{n+1}]_{11} ────────────────────────────

def leading_coeff_law(q, n):
    """q^{n+1}/(2·n!)·(A(n, 0) + A_n(2/q)), expanded so q = 0 gives 0."""
    a = combinatorics.alt_descent_table(n).a
    total = a[0] * q ** (n + 1)
    # A(n, k) vanishes for k >= n, so every exponent n + 1 − k is at least 2
    total += sum(c * 2 ** k * q ** (n + 1 - k) for k, c in enumerate(a))
    return Fraction(total, 2 * factorial(n))


def inverted_leading_coeff_law(q, n):
    """q²/(2·n!)·(A(n, 0) + A_n(2q)); agrees with leading_coeff_law only for q <= 1 or n <= 2."""
    table = combinatorics.alt_descent_table(n)
    poly = combinatorics.alt_eulerian_poly(n)
    return Fraction(q * q, 2 * factorial(n)) * (table.a[0] + poly(2 * q))


def leading_coeff_Q(q, n):
    if q < 0 or n < 1:
        raise InputError('leading_coeff_Q needs q >= 0, n >= 1')
    points = [
        (k, matrices.corner_power(matrices.StructuredMatrixSpec.Q(q, k), n + 1))
        for k in range(1, n + 3)
    ]
    poly = interpolate(points)
    if poly.degree > n:
        raise InconsistencyError(f'k ↦ [Q({q},k)^{n + 1}]_11 has degree {poly.degree} > {n}')
    if q >= 1 and poly.degree != n:
        raise InconsistencyError(f'k ↦ [Q({q},k)^{n + 1}]_11 has degree {poly.degree} < {n}')
    return poly.coefficient(n)


# ── Volumes of the cube regions ───────────────────────────────────────────────

@dataclass(frozen=True)
class VolumeRow:
    j: int
    volume: Fraction
    expected: Fraction
    patterns: tuple

    @property
    def ok(self):
        return self.volume == self.expected


def verify_alt_volume_lemma(n):
    """Σ vol over patterns with j '≥' signs against A(n, j)/n!, j = 0..n−1."""
    if not 1 <= n <= 6:
        raise InputError('verify_alt_volume_lemma needs 1 <= n <= 6')
    table = combinatorics.alt_descent_table(n)
    volumes = [Fraction(0)] * n
    grouped = [[] for _ in range(n)]
    for pattern in polytopes.all_patterns(n):
        j = pattern.count(polytopes.GE)
        volumes[j] += polytopes.volume_of_region(n, pattern)
        grouped[j].append(pattern)
    return [
        VolumeRow(j, volumes[j], Fraction(table.a[j], factorial(n)), tuple(grouped[j]))
        for j in range(n)
    ]
