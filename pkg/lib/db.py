"""
Cache layer (SQLite)
Swap tables keyed by (d, convention), stored as the exact JSON payload,
plus a log of verification runs.
"""
import logging
import os
import sqlite3

from lib import combinatorics, config
from lib.serialize import swap_table_json

logger = logging.getLogger(__name__)


def get_db(cache_dir=None):
    """Connection to the cache in cache_dir (or HKQ_CACHE_DIR), creating schema if needed.

    Returns None when no cache directory is configured.
    """
    cache_dir = cache_dir or config.CACHE_DIR
    if not cache_dir:
        return None
    os.makedirs(cache_dir, exist_ok=True)
    conn = sqlite3.connect(os.path.join(cache_dir, config.CACHE_FILE))
    conn.row_factory = sqlite3.Row
    conn.execute("PRAGMA journal_mode=WAL")
    _init_schema(conn)
    return conn


def _init_schema(conn):
    conn.executescript("""
        CREATE TABLE IF NOT EXISTS swap_tables (
            d           INTEGER NOT NULL,
            convention  TEXT NOT NULL,
            payload     TEXT NOT NULL,
            created_at  TEXT DEFAULT (datetime('now')),
            PRIMARY KEY (d, convention)
        );

        CREATE TABLE IF NOT EXISTS run_logs (
            id          INTEGER PRIMARY KEY AUTOINCREMENT,
            suite       TEXT NOT NULL,
            status      TEXT NOT NULL,
            checks      INTEGER DEFAULT 0,
            failures    INTEGER DEFAULT 0,
            started_at  TEXT,
            finished_at TEXT
        );

        CREATE INDEX IF NOT EXISTS idx_run_logs_suite ON run_logs(suite);
    """)


# ── Swap tables ───────────────────────────────────────────────────────────────

def get_swap_payload(conn, d):
    row = conn.execute(
        'SELECT payload FROM swap_tables WHERE d = ? AND convention = ?',
        (d, config.CONVENTION),
    ).fetchone()
    return row['payload'] if row else None


def put_swap_payload(conn, d, payload):
    conn.execute("""
        INSERT INTO swap_tables (d, convention, payload)
        VALUES (?, ?, ?)
        ON CONFLICT(d, convention) DO UPDATE SET
            payload    = excluded.payload,
            created_at = datetime('now')
    """, (d, config.CONVENTION, payload))


def swap_payload(conn, d, cap=None):
    """The JSON payload for swap table d, from the cache when present."""
    if conn is not None:
        cached = get_swap_payload(conn, d)
        if cached is not None:
            logger.debug('swap table d=%d: cache hit', d)
            return cached
    payload = swap_table_json(combinatorics.swap_table(d, cap=cap))
    if conn is not None:
        put_swap_payload(conn, d, payload)
        conn.commit()
    return payload


def cached_dimensions(conn):
    return [r['d'] for r in conn.execute(
        'SELECT d FROM swap_tables WHERE convention = ? ORDER BY d', (config.CONVENTION,)
    ).fetchall()]


# ── Run log ───────────────────────────────────────────────────────────────────

def log_run(conn, suite, status, checks=0, failures=0, started_at=None):
    conn.execute("""
        INSERT INTO run_logs (suite, status, checks, failures, started_at, finished_at)
        VALUES (?, ?, ?, ?, ?, datetime('now'))
    """, (suite, status, checks, failures, started_at))


def get_runs(conn, suite=None):
    sql = 'SELECT * FROM run_logs'
    params = []
    if suite:
        sql += ' WHERE suite = ?'
        params.append(suite)
    sql += ' ORDER BY id ASC'
    return [dict(r) for r in conn.execute(sql, params).fetchall()]
