from decimal import Decimal
from fractions import Fraction

import pytest

from adjcut.utils import *
from adjcut.errors import CostError, GraphError


def test_is_label():
    assert is_label('A')
    assert is_label('V07')
    assert is_label("X'")
    assert not is_label('')
    assert not is_label('two words')
    assert not is_label(7)


def test_parse_cost():
    assert parse_cost('2') == 2
    assert parse_cost('2.5') == Fraction(5, 2)
    assert parse_cost('0.000001') == Fraction(1, 10**6)
    assert parse_cost(' 3.10 ') == Fraction(31, 10)
    assert parse_cost('+1') == 1


@pytest.mark.parametrize('text', ['0', '0.0', '-1', '-0.5'])
def test_parse_cost_positive(text):
    with pytest.raises(CostError, match='strictly positive'):
        parse_cost(text)


@pytest.mark.parametrize('text', ['', 'abc', '1e3', '1,5', '.5', '1.', 'inf', 'nan'])
def test_parse_cost_malformed(text):
    with pytest.raises(CostError, match='malformed'):
        parse_cost(text)


def test_parse_cost_digits():
    with pytest.raises(CostError, match='fractional digits'):
        parse_cost('0.0000001')
    assert parse_cost('0.0000001', digits=7) == Fraction(1, 10**7)


def test_as_cost():
    assert as_cost(3) == 3
    assert as_cost('1.5') == Fraction(3, 2)
    assert as_cost(0.1) == Fraction(1, 10)
    assert as_cost(Decimal('2.25')) == Fraction(9, 4)
    assert as_cost(Fraction(1, 3)) == Fraction(1, 3)
    for bad in (0, -2, Fraction(-1, 2), True, None, [1]):
        with pytest.raises(CostError):
            as_cost(bad)


def test_format_cost():
    assert format_cost(Fraction(3)) == '3'
    assert format_cost(Fraction(5, 2)) == '2.5'
    assert format_cost(Fraction(1, 8)) == '0.125'
    assert format_cost(Fraction(7, 20)) == '0.35'
    assert format_cost(Fraction(1, 3)) == '1/3'
    assert format_cost(Fraction(0)) == '0'
    assert format_cost(parse_cost('12.000300')) == '12.0003'


def test_format_set():
    assert format_set({'X', 'K'}) == '{K, X}'
    assert format_set(set()) == '{}'


def test_parse_set():
    assert parse_set('X,T,R') == {'X', 'T', 'R'}
    assert parse_set(' X , T ') == {'X', 'T'}
    assert parse_set('') == frozenset()
    assert parse_set('X,,T') == {'X', 'T'}


def test_check_labels():
    check_labels(['A', 'B'])
    with pytest.raises(GraphError, match='invalid vertex label'):
        check_labels(['A', 'B C'])


def test_scale_costs():
    assert cost_scale([]) == 1
    assert cost_scale([Fraction(1, 2), Fraction(1, 3), Fraction(2)]) == 6
    scaled, scale = scale_costs({'B': Fraction(1, 2), 'Q': Fraction(3)})
    assert scale == 2
    assert scaled == {'B': 1, 'Q': 6}
    scaled, scale = scale_costs({'B': Fraction(1, 2)}, scale=10)
    assert (scaled, scale) == ({'B': 5}, 10)
