#!/usr/bin/env python3
"""
Seed Script

Pre-computes swap tables for d = 1..cap into the sqlite cache so later
`swap` and `verify` runs read them instead of enumerating.

Usage:
    python3 seed.py --cache-dir .cache            # d = 1..HKQ_SWAP_CAP
    python3 seed.py --cache-dir .cache --d-max 10
"""
import argparse
import logging
import os
import sys
import time

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from lib import config
from lib.db import cached_dimensions, get_db, swap_payload
from lib.report import RULE, banner


def seed(conn, d_max):
    """Fill the cache for d = 1..d_max; returns (d, seconds) per table computed or read."""
    timings = []
    for d in range(1, d_max + 1):
        start = time.time()
        swap_payload(conn, d, cap=max(d_max, config.SWAP_CAP))
        timings.append((d, time.time() - start))
    return timings


def main(argv=None):
    parser = argparse.ArgumentParser(description='Warm the swap-table cache')
    parser.add_argument('--cache-dir', help='cache directory (default $HKQ_CACHE_DIR)')
    parser.add_argument('--d-max', type=int, default=config.SWAP_CAP)
    parser.add_argument('--verbose', '-v', action='store_true')
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format='[%(name)s] %(message)s', stream=sys.stderr, force=True)

    conn = get_db(args.cache_dir)
    if conn is None:
        print('seed: no cache directory (use --cache-dir or HKQ_CACHE_DIR)', file=sys.stderr)
        return 2

    print('\n'.join(banner('Swap-table cache')))
    print(f'  Convention: {config.CONVENTION}')
    print(f'  Dimensions: 1..{args.d_max}')
    print()
    for d, elapsed in seed(conn, args.d_max):
        print(f'  ✓ d={d} ({elapsed:.1f}s)')
    print(f'\n  Cached tables: {len(cached_dimensions(conn))}')
    print(RULE)
    conn.close()
    return 0


if __name__ == '__main__':
    sys.exit(main())
