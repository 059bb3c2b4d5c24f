"""
Configuration

Enumeration caps, budgets and the cache location. Every value can be
overridden from the environment; capped functions also take an explicit
`cap=` keyword which wins over both.
"""
import os


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    return int(raw)


# ── Enumeration caps ──────────────────────────────────────────────────────────
SWAP_CAP = _env_int('HKQ_SWAP_CAP', 12)           # alternating permutations of [d]
KREWERAS_CAP = _env_int('HKQ_KREWERAS_CAP', 9)    # alternating surjections [n] -> [r]
DESCENT_CAP = _env_int('HKQ_DESCENT_CAP', 10)     # all permutations of [n]
WORD_CAP = _env_int('HKQ_WORD_CAP', 14)           # six-letter corner words
BRUTE_BUDGET = _env_int('HKQ_BRUTE_BUDGET', 10 ** 8)  # tuples visited by brute force

# ── Cache ─────────────────────────────────────────────────────────────────────
CACHE_DIR = os.environ.get('HKQ_CACHE_DIR') or None
CACHE_FILE = 'hkq_cache.db'

# Tag embedded in every cache key; bump it if the alternating convention changes.
CONVENTION = 'down-up-v1'

# Display precision for decimal approximations (never used in comparisons).
DECIMAL_DIGITS = 20
