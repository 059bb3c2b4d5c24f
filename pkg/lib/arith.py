"""
Exact Arithmetic

Rationals, dense univariate polynomials over Q, interpolation, composition
and reduced rational functions. Everything here is immutable and exact;
there is no floating point anywhere in the package.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, gcd, lcm

from sympy import Poly, Rational as SymRational, Symbol

from lib.errors import InputError

# Rationals are plain Fractions: reduced on construction, denominator > 0.
Rational = Fraction

_X = Symbol('x')


def rational(value):
    """Coerce int / str ('3/4') / Fraction to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f'not a rational: {value!r}')
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise InputError(f'not a rational: {value!r}')


# ── Polynomials ───────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial, ascending coefficients, no trailing zeros."""
    coeffs: tuple = ()

    def __post_init__(self):
        cs = [rational(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, 'coeffs', tuple(cs))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def linear(cls, slope, intercept):
        """slope·x + intercept"""
        return cls((intercept, slope))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        x = rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise InputError('negative polynomial power')
        result = Polynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def parity_pattern(self):
        """Set of exponent parities (0 even, 1 odd) carrying non-zero coefficients."""
        return {i % 2 for i, c in enumerate(self.coeffs) if c != 0}

    def __str__(self):
        if self.is_zero:
            return '0'
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = '-' if c < 0 else '+'
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = 'x' if i == 1 else f'x^{i}'
                body = mono if mag == 1 else f'{mag}*{mono}'
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ('-' if first_sign == '-' else '') + first_body
        for sign, body in terms[1:]:
            out += f' {sign} {body}'
        return out


def _as_poly(value):
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(rational(value))


def binomial_poly(shift, d):
    """k ↦ C(k + shift, d) as a polynomial in k."""
    k = Polynomial.x()
    result = Polynomial.constant(1)
    for i in range(d):
        result = result * (k + (shift - i))
    return result * Fraction(1, factorial(d))


# ── Interpolation & composition ───────────────────────────────────────────────

def interpolate(points):
    """Unique polynomial of degree < len(points) through all points (Newton form)."""
    pts = [(rational(x), rational(y)) for x, y in points]
    if not pts:
        raise InputError('interpolation needs at least one point')
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise InputError('degenerate interpolation node')

    # divided differences, in place
    table = [y for _, y in pts]
    n = len(pts)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])

    result = Polynomial.constant(table[-1])
    for i in range(n - 2, -1, -1):
        result = result * Polynomial.linear(1, -xs[i]) + table[i]
    return result


def compose(outer, inner):
    """outer ∘ inner."""
    result = Polynomial()
    for c in reversed(outer.coeffs):
        result = result * inner + c
    return result


# ── Rational functions ────────────────────────────────────────────────────────

@dataclass(frozen=True)
class RationalFunction:
    """numerator/denominator in lowest terms, integer coefficients, den leading > 0."""
    numerator: Polynomial
    denominator: Polynomial
    unreduced_deg_num: int = field(default=-1, compare=False)
    unreduced_deg_den: int = field(default=0, compare=False)

    def evaluate(self, x):
        den = self.denominator.evaluate(x)
        if den == 0:
            raise InputError(f'rational function has a pole at {x}')
        return self.numerator.evaluate(x) / den

    def __call__(self, x):
        return self.evaluate(x)

    @property
    def is_constant(self):
        return self.numerator.degree <= 0 and self.denominator.degree == 0

    def __str__(self):
        if self.denominator.degree == 0:
            return str(self.numerator * (1 / self.denominator.coeffs[0]))
        return f'({self.numerator}) / ({self.denominator})'


def _to_sympy(poly):
    coeffs = [SymRational(c.numerator, c.denominator) for c in reversed(poly.coeffs)]
    return Poly(coeffs or [0], _X, domain='QQ')


def _from_sympy(sp):
    return Polynomial(tuple(Fraction(int(c.p), int(c.q)) for c in reversed(sp.all_coeffs())))


def reduce(num, den):
    """Reduce num/den to the canonical RationalFunction."""
    num, den = _as_poly(num), _as_poly(den)
    if den.is_zero:
        raise InputError('zero denominator')
    deg_num, deg_den = num.degree, den.degree

    if num.is_zero:
        return RationalFunction(Polynomial(), Polynomial.constant(1), deg_num, deg_den)

    sp_num, sp_den = _to_sympy(num), _to_sympy(den)
    g = sp_num.gcd(sp_den)
    n, d = _from_sympy(sp_num.exquo(g)), _from_sympy(sp_den.exquo(g))

    # clear coefficient denominators, then strip the common integer content
    scale = 1
    for c in n.coeffs + d.coeffs:
        scale = lcm(scale, c.denominator)
    n_int = [int(c * scale) for c in n.coeffs]
    d_int = [int(c * scale) for c in d.coeffs]
    content = 0
    for c in n_int + d_int:
        content = gcd(content, c)
    if d_int[-1] < 0:
        content = -content
    n = Polynomial(tuple(Fraction(c, content) for c in n_int))
    d = Polynomial(tuple(Fraction(c, content) for c in d_int))
    return RationalFunction(n, d, deg_num, deg_den)
