"""
Serialization

JSON and CSV renderings of results. Every number leaves as a decimal
string, so output re-parses losslessly: rationals as {"num", "den"} in JSON
and "num/den" in CSV. Decimal approximations are display-only.
"""
import csv
import io
import json
from decimal import Decimal, localcontext
from fractions import Fraction

from lib import config
from lib.arith import Polynomial, RationalFunction
from lib.combinatorics import SwapTable
from lib.errors import InputError
from lib.quadrics import EhkFunction


def rat_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f'{x.numerator}/{x.denominator}'


def parse_rational(text):
    try:
        return Fraction(text)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise InputError(f'not a rational: {text!r}') from e


def decimal_approx(x, digits=None):
    """x to `digits` significant digits (default config.DECIMAL_DIGITS)."""
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = digits or config.DECIMAL_DIGITS
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def dumps(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False)


# ── Polynomials & rational functions ──────────────────────────────────────────

def rational_json(x):
    x = Fraction(x)
    return {'num': str(x.numerator), 'den': str(x.denominator)}


def parse_rational_json(obj):
    den = int(obj['den'])
    if den <= 0:
        raise InputError(f'denominator must be positive, got {den}')
    return Fraction(int(obj['num']), den)


def poly_json(poly):
    """Ascending coefficients."""
    return {'coeffs': [rational_json(c) for c in poly.coeffs]}


def parse_poly(obj):
    return Polynomial(tuple(parse_rational_json(c) for c in obj['coeffs']))


def rational_function_json(rf):
    return {
        'num': poly_json(rf.numerator),
        'den': poly_json(rf.denominator),
        'unreduced_deg_num': rf.unreduced_deg_num,
        'unreduced_deg_den': rf.unreduced_deg_den,
    }


def parse_rational_function(obj):
    return RationalFunction(
        parse_poly(obj['num']),
        parse_poly(obj['den']),
        obj.get('unreduced_deg_num', -1),
        obj.get('unreduced_deg_den', 0),
    )


# ── Results ───────────────────────────────────────────────────────────────────

def ehk_result_json(result):
    return {
        'p': result.p,
        'd': result.d,
        'method': result.method,
        'value': rational_json(result.value),
        'text': rat_str(result.value),
        'decimal': decimal_approx(result.value),
    }


def ehk_function_json(fn):
    return {
        'd': fn.d,
        'reduced': rational_function_json(fn.reduced),
        'text': str(fn.reduced),
        'unreduced': {
            'num': poly_json(fn.unreduced_num),
            'den': poly_json(fn.unreduced_den),
        },
    }


def parse_ehk_function(obj):
    return EhkFunction(
        obj['d'],
        parse_rational_function(obj['reduced']),
        parse_poly(obj['unreduced']['num']),
        parse_poly(obj['unreduced']['den']),
    )


def swap_table_json(table):
    """Exact cache payload; identical bytes for identical tables."""
    return json.dumps({
        'd': table.d,
        'convention': config.CONVENTION,
        's': [str(c) for c in table.s],
    })


def parse_swap_table(text):
    obj = json.loads(text)
    if obj.get('convention') != config.CONVENTION:
        raise InputError(f'swap table convention {obj.get("convention")!r} != {config.CONVENTION!r}')
    return SwapTable(obj['d'], tuple(int(c) for c in obj['s']))


def check_json(check):
    out = {'name': check.name, 'ok': check.ok, 'asserted': check.asserted}
    if check.detail:
        out['detail'] = check.detail
    if check.witness is not None:
        out['witness'] = str(check.witness)
    return out


def report_json(report):
    return {
        'suite': report.suite,
        'ok': report.ok,
        'checks': [check_json(c) for c in report.checks],
        'failures': len(report.failures),
    }


# ── CSV ───────────────────────────────────────────────────────────────────────

SCAN_HEADER = ('d', 'p', 'num', 'den', 'decimal_approx_20digits')


def scan_rows(d, p, value):
    value = Fraction(value)
    return (d, p, value.numerator, value.denominator, decimal_approx(value))


def to_csv(header, rows):
    """RFC-4180 text: header row, minimal quoting, CRLF line ends."""
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_MINIMAL, lineterminator='\r\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([rat_str(x) if isinstance(x, Fraction) else x for x in row])
    return buf.getvalue()


def parse_csv(text):
    reader = csv.reader(io.StringIO(text))
    header, *rows = list(reader)
    return header, rows
