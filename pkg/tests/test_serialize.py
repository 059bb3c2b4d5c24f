"""JSON / CSV renderings."""
import json
from fractions import Fraction

import pytest

from lib import combinatorics, quadrics, serialize
from lib.errors import InputError
from lib.report import Check, Report


def test_rat_str_and_parse():
    assert serialize.rat_str(Fraction(3)) == '3'
    assert serialize.rat_str(Fraction(-23, 19)) == '-23/19'
    assert serialize.parse_rational('23/19') == Fraction(23, 19)
    with pytest.raises(InputError):
        serialize.parse_rational('x')


def test_decimal_approx():
    assert serialize.decimal_approx(Fraction(1, 3), 5) == '0.33333'
    assert serialize.decimal_approx(Fraction(23, 19)) == '1.2105263157894736842'


def test_rational_json():
    assert serialize.rational_json(Fraction(-3, 4)) == {'num': '-3', 'den': '4'}
    assert serialize.parse_rational_json({'num': '-3', 'den': '4'}) == Fraction(-3, 4)
    with pytest.raises(InputError):
        serialize.parse_rational_json({'num': '1', 'den': '0'})


def test_ehk_result_json():
    out = serialize.ehk_result_json(quadrics.compute(3, 4, 'matrix'))
    assert out == {
        'p': 3, 'd': 4, 'method': 'matrix',
        'value': {'num': '23', 'den': '19'},
        'text': '23/19',
        'decimal': '1.2105263157894736842',
    }


def test_ehk_function_reparses():
    fn = quadrics.ehk_function(4)
    text = serialize.dumps(serialize.ehk_function_json(fn))
    back = serialize.parse_ehk_function(json.loads(text))
    assert back == fn
    assert back.unreduced_num == fn.unreduced_num
    assert back.unreduced_den == fn.unreduced_den
    assert back.reduced.unreduced_deg_num == 4


def test_swap_table_payload():
    payload = serialize.swap_table_json(combinatorics.swap_table(4))
    assert payload == '{"d": 4, "convention": "down-up-v1", "s": ["1", "3", "1"]}'
    assert serialize.parse_swap_table(payload) == combinatorics.swap_table(4)
    with pytest.raises(InputError):
        serialize.parse_swap_table(payload.replace('down-up-v1', 'up-down'))


def test_scan_csv():
    text = serialize.to_csv(serialize.SCAN_HEADER, [serialize.scan_rows(4, 3, Fraction(23, 19))])
    assert text == 'd,p,num,den,decimal_approx_20digits\r\n4,3,23,19,1.2105263157894736842\r\n'
    header, rows = serialize.parse_csv(text)
    assert header == list(serialize.SCAN_HEADER)
    assert rows == [['4', '3', '23', '19', '1.2105263157894736842']]


def test_csv_quotes_and_fractions():
    text = serialize.to_csv(('name', 'value'), [('a,b', Fraction(1, 2))])
    assert text == 'name,value\r\n"a,b",1/2\r\n'


def test_report_json():
    report = Report('demo', [Check('one', True, '3 cases'), Check('two', False, witness=(1, 2))])
    out = serialize.report_json(report)
    assert out['suite'] == 'demo'
    assert out['ok'] is False
    assert out['failures'] == 1
    assert out['checks'][1] == {'name': 'two', 'ok': False, 'asserted': True, 'witness': '(1, 2)'}
