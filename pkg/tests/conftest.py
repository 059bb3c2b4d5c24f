import os
import sys
from fractions import Fraction

import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, ROOT)

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'golden')

# e_HK(A_{3,d}) for d = 1..4
KNOWN_P3 = {1: Fraction(2), 2: Fraction(3, 2), 3: Fraction(4, 3), 4: Fraction(23, 19)}


@pytest.fixture
def golden_dir():
    return GOLDEN_DIR


@pytest.fixture
def load_matrix():
    """Read a whitespace-separated integer matrix, skipping '#' lines."""
    def load(name):
        rows = []
        with open(os.path.join(GOLDEN_DIR, name)) as f:
            for line in f:
                line = line.strip()
                if not line or line.startswith('#'):
                    continue
                rows.append(tuple(int(x) for x in line.split()))
        return tuple(rows)
    return load


@pytest.fixture
def no_cache(monkeypatch):
    from lib import config
    monkeypatch.setattr(config, 'CACHE_DIR', None)
