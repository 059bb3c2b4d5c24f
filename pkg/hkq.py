#!/usr/bin/env python3
"""
Hilbert–Kunz Multiplicity of Quadrics: command line

Exact e_HK(A_{p,d}) by three routes, the rational function in p, lattice
counts, Ehrhart polynomials, swap tables and the verification suites.

Usage:
    python3 hkq.py ehk --p 3 --d 4 --method all
    python3 hkq.py function --d 4 --format json
    python3 hkq.py count --polytope fibonacci --d 3 --k 2 --oracle
    python3 hkq.py ehrhart --polytope fibonacci --d 3
    python3 hkq.py swap --d 6 --cache-dir .cache
    python3 hkq.py verify identities --d-max 8 --p-max 31

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
import argparse
import json
import logging
import os
import sys
from datetime import datetime, timezone

from sympy import isprime

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from lib import combinatorics, polytopes, quadrics
from lib.db import get_db, log_run, swap_payload
from lib.errors import HkqError, InputError, VerificationError
from lib.polytopes import LatticeCountQuery
from lib.report import Report, banner, render_text, RULE
from lib.serialize import (SCAN_HEADER, decimal_approx, dumps, ehk_function_json, ehk_result_json,
                           poly_json, rat_str, report_json, scan_rows, to_csv)
from suites import Bounds
from suites import (appendix, convergence, ehrhart, identities, kreweras, monotone_d, monotone_p,
                    parity, volumes)

logger = logging.getLogger('hkq')

SUITES = {
    'identities': identities,
    'ehrhart': ehrhart,
    'monotone-d': monotone_d,
    'monotone-p': monotone_p,
    'parity': parity,
    'convergence': convergence,
    'appendix': appendix,
    'volumes': volumes,
    'kreweras': kreweras,
}

FORMATS = ('text', 'json', 'csv')


def emit(text):
    sys.stdout.write(text if text.endswith('\n') else text + '\n')


def emit_lines(lines):
    emit('\n'.join(lines))


# ── ehk ───────────────────────────────────────────────────────────────────────

def cmd_ehk(args):
    if args.p is None or args.d is None:
        raise InputError('ehk needs --p and --d')
    if args.method == 'all':
        # repring needs a prime p; the other routes take any odd p
        methods = [m for m in quadrics.METHODS if m != 'repring' or isprime(args.p)]
    else:
        methods = [args.method]
    results = [quadrics.compute(args.p, args.d, m) for m in methods]
    agree = len({r.value for r in results}) == 1

    if args.format == 'json':
        emit(dumps({'p': args.p, 'd': args.d, 'agree': agree,
                    'results': [ehk_result_json(r) for r in results]}))
    elif args.format == 'csv':
        emit(to_csv(SCAN_HEADER + ('method',),
                    [scan_rows(r.d, r.p, r.value) + (r.method,) for r in results]))
    else:
        lines = banner(f'e_HK(A_{{{args.p},{args.d}}})')
        for r in results:
            icon = '✓' if agree else '✗'
            lines.append(f'  {icon} {r.method:8s} {rat_str(r.value)}  ≈ {decimal_approx(r.value)}')
        lines.append(RULE)
        emit_lines(lines)
    if not agree:
        logger.warning('methods disagree at p=%d, d=%d', args.p, args.d)
        return 1
    return 0


# ── function ──────────────────────────────────────────────────────────────────

def cmd_function(args):
    if args.d is None:
        raise InputError('function needs --d')
    if args.method == 'repring':
        raise InputError('function supports --method ehrhart or matrix')
    source = 'ehrhart' if args.method == 'all' else args.method
    fn = quadrics.ehk_function(args.d, source)
    if args.format == 'json':
        emit(dumps(ehk_function_json(fn)))
    elif args.format == 'csv':
        rows = [('num', i, c) for i, c in enumerate(fn.unreduced_num.coeffs)]
        rows += [('den', i, c) for i, c in enumerate(fn.unreduced_den.coeffs)]
        emit(to_csv(('part', 'power', 'coefficient'), rows))
    else:
        lines = banner(f'e_HK(A_{{p,{args.d}}}) as a function of p')
        lines.append(f'  reduced:   {fn.reduced}')
        lines.append(f'  numerator: {fn.unreduced_num}   (degree {fn.unreduced_num.degree})')
        lines.append(f'  denominator: {fn.unreduced_den}   (degree {fn.unreduced_den.degree})')
        lines.append(f'  limit p → ∞: {rat_str(quadrics.gm_limit(args.d))}')
        lines.append(RULE)
        emit_lines(lines)
    return 0


# ── count / ehrhart ───────────────────────────────────────────────────────────

def _pattern(args):
    if args.polytope != 'region':
        return None
    if not args.pattern:
        raise InputError('region counts need --pattern, e.g. "<=,>="')
    return polytopes.normalize_pattern(s for s in args.pattern.split(',') if s.strip())


def _count(polytope, d, k, pattern):
    if polytope == 'fibonacci':
        return polytopes.count_fibonacci(d, k)
    if polytope == 'extended':
        return polytopes.count_extended(d, k)
    return polytopes.count_region(d, pattern, k)


def cmd_count(args):
    if args.d is None or args.k is None:
        raise InputError('count needs --d and --k')
    pattern = _pattern(args)
    value = _count(args.polytope, args.d, args.k, pattern)
    oracle = None
    if args.oracle:
        query = LatticeCountQuery(args.polytope, args.d, args.k, pattern)
        oracle = polytopes.brute_force_count(query, budget=args.budget)

    if args.format == 'json':
        out = {'polytope': args.polytope, 'd': args.d, 'k': args.k, 'count': str(value)}
        if pattern:
            out['pattern'] = list(pattern)
        if oracle is not None:
            out['oracle'] = str(oracle)
        emit(dumps(out))
    elif args.format == 'csv':
        emit(to_csv(('polytope', 'd', 'k', 'count', 'oracle'),
                    [(args.polytope, args.d, args.k, value, '' if oracle is None else oracle)]))
    else:
        emit(str(value))
        if oracle is not None:
            emit(f'  {"✓" if oracle == value else "✗"} brute force: {oracle}')
    if oracle is not None and oracle != value:
        raise VerificationError(f'{args.polytope} count at d={args.d}, k={args.k}', (value, oracle))
    return 0


def cmd_ehrhart(args):
    if args.d is None:
        raise InputError('ehrhart needs --d')
    pattern = _pattern(args)
    if args.polytope == 'fibonacci':
        poly = polytopes.ehrhart_fibonacci(args.d)
    elif args.polytope == 'extended':
        poly = polytopes.ehrhart_extended(args.d)
    else:
        poly = polytopes.ehrhart_region(args.d, pattern)

    if args.oracle:
        if args.polytope == 'fibonacci':
            ok = poly == combinatorics.ehrhart_from_swaps(args.d)
        else:
            ok = all(
                poly(k) == polytopes.brute_force_count(
                    LatticeCountQuery(args.polytope, args.d, k, pattern), budget=args.budget)
                for k in range(args.d + 2)
            )
        if not ok:
            raise VerificationError(f'{args.polytope} Ehrhart polynomial at d={args.d}')

    if args.format == 'json':
        emit(dumps({'polytope': args.polytope, 'd': args.d, 'polynomial': poly_json(poly)}))
    elif args.format == 'csv':
        emit(to_csv(('power', 'coefficient'), list(enumerate(poly.coeffs))))
    else:
        emit('[' + ', '.join(rat_str(c) for c in poly.coeffs) + ']')
    return 0


# ── swap ──────────────────────────────────────────────────────────────────────

def cmd_swap(args):
    if args.d is None:
        raise InputError('swap needs --d')
    conn = get_db(args.cache_dir)
    try:
        payload = swap_payload(conn, args.d)
    finally:
        if conn:
            conn.close()
    table = json.loads(payload)
    if args.oracle:
        total = sum(int(c) for c in table['s'])
        if total != combinatorics.count_alternating_brute(args.d):
            raise VerificationError(f'swap table d={args.d} does not sum to E_d', total)

    if args.format == 'json':
        emit(payload)
    elif args.format == 'csv':
        emit(to_csv(('m', 's'), list(enumerate(table['s']))))
    else:
        emit('[' + ', '.join(table['s']) + ']')
    return 0


# ── verify ────────────────────────────────────────────────────────────────────

def cmd_verify(args):
    names = list(SUITES) if args.suite == 'all' else [args.suite]
    bounds = Bounds(d_max=args.d_max, p_max=args.p_max, n_max=args.n_max, q=args.q)
    conn = get_db(args.cache_dir)
    reports = []
    for name in names:
        started = datetime.now(timezone.utc).strftime('%Y-%m-%d %H:%M:%S')
        logger.info('running suite %s', name)
        report = Report(name, SUITES[name].run(bounds))
        reports.append(report)
        if conn:
            log_run(conn, name, 'pass' if report.ok else 'fail',
                    len(report.checks), len(report.failures), started)
            conn.commit()
    if conn:
        conn.close()

    if args.format == 'json':
        emit(dumps([report_json(r) for r in reports]))
    elif args.format == 'csv':
        rows = [(r.suite, c.name, 'pass' if c.ok else 'fail', 'assert' if c.asserted else 'report',
                 c.detail, '' if c.witness is None else str(c.witness))
                for r in reports for c in r.checks]
        emit(to_csv(('suite', 'check', 'status', 'kind', 'detail', 'witness'), rows))
    else:
        lines = []
        for r in reports:
            lines.extend(render_text(r))
        if len(reports) > 1:
            lines.extend(['', *banner('Summary')])
            for r in reports:
                lines.append(f"  {'✓' if r.ok else '✗'} {r.suite}: {len(r.failures)} failures")
            lines.append(RULE)
        emit_lines(lines)
    return 0 if all(r.ok for r in reports) else 1


# ── Parser ────────────────────────────────────────────────────────────────────

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--p', type=int, help='odd characteristic p >= 3')
    common.add_argument('--d', type=int, help='dimension d')
    common.add_argument('--k', type=int, help='dilation factor k')
    common.add_argument('--q', type=int, help='corner weight q of Q(q, k) for the appendix suite')
    common.add_argument('--n-max', type=int, help='suite bound on n')
    common.add_argument('--d-max', type=int, help='suite bound on d')
    common.add_argument('--p-max', type=int, help='suite bound on p')
    common.add_argument('--method', default='all', choices=('repring', 'matrix', 'ehrhart', 'all'))
    common.add_argument('--polytope', default='fibonacci', choices=polytopes.FAMILIES)
    common.add_argument('--pattern', help='region signs, comma separated: "<=,>=,<="')
    common.add_argument('--format', default='text', choices=FORMATS)
    common.add_argument('--cache-dir', help='swap-table cache directory (default $HKQ_CACHE_DIR)')
    common.add_argument('--oracle', action='store_true', help='cross-check by brute force')
    common.add_argument('--budget', type=int, help='brute-force tuple budget')
    common.add_argument('--verbose', '-v', action='store_true', help='log progress to stderr')

    parser = argparse.ArgumentParser(description='Exact Hilbert–Kunz multiplicity of quadrics')
    sub = parser.add_subparsers(dest='command', required=True)
    sub.add_parser('ehk', parents=[common], help='e_HK(A_{p,d})').set_defaults(func=cmd_ehk)
    sub.add_parser('function', parents=[common], help='e_HK as a rational function of p').set_defaults(func=cmd_function)
    sub.add_parser('count', parents=[common], help='lattice points of a dilated polytope').set_defaults(func=cmd_count)
    sub.add_parser('ehrhart', parents=[common], help='Ehrhart polynomial coefficients').set_defaults(func=cmd_ehrhart)
    sub.add_parser('swap', parents=[common], help='swap-statistic table').set_defaults(func=cmd_swap)
    verify = sub.add_parser('verify', parents=[common], help='run a verification suite')
    verify.add_argument('suite', choices=list(SUITES) + ['all'])
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format='[%(name)s] %(message)s',
        stream=sys.stderr,
        force=True,
    )
    try:
        return args.func(args)
    except InputError as e:
        print(f'hkq: error: {e}', file=sys.stderr)
        return 2
    except HkqError as e:
        print(f'hkq: {e}', file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
