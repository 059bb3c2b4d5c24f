"""
Verification suites. Each module exposes run(bounds) -> list[Check].
"""
from dataclasses import dataclass
from typing import Optional

from sympy import primerange

from lib.report import Check


@dataclass(frozen=True)
class Bounds:
    d_max: Optional[int] = None
    p_max: Optional[int] = None
    n_max: Optional[int] = None
    q: Optional[int] = None

    def get(self, name, default):
        value = getattr(self, name)
        return default if value is None else value


def grid_check(name, cases, asserted=True):
    """Fold (key, ok) pairs into one Check; the first failing key is the witness."""
    count = 0
    witness = None
    for key, ok in cases:
        count += 1
        if not ok and witness is None:
            witness = key
    return Check(name, witness is None, f'{count} cases', witness, asserted)


def odd_primes(p_max):
    return list(primerange(3, p_max + 1))
