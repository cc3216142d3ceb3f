from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from rcpoly.errors import NotCoprime, ParseError
from rcpoly.exact import (bernoulli2_periodized, bracket_mod, ceil, ext_gcd, floor, format_rational,
                          frac, mod_inverse, parse_rational, sawtooth)

rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 1000)


@pytest.mark.parametrize("x,expected", [(F(7, 2), 3), (F(-1, 2), -1), (F(4), 4)])
def test_floor(x, expected):
    assert floor(x) == expected


@pytest.mark.parametrize("x,expected", [(F(7, 2), 4), (F(-1, 2), 0), (F(3), 3)])
def test_ceil(x, expected):
    assert ceil(x) == expected


@pytest.mark.parametrize("x,expected", [(F(7, 2), F(1, 2)), (F(-1, 3), F(2, 3)), (F(5), 0)])
def test_frac(x, expected):
    assert frac(x) == expected


@pytest.mark.parametrize("x,expected", [(F(0), 0), (F(1, 4), F(-1, 4)), (F(3, 2), 0)])
def test_sawtooth(x, expected):
    assert sawtooth(x) == expected


@pytest.mark.parametrize("x,m,expected", [(F(7, 2), 3, F(1, 2)), (F(-1), 5, 4), (F(0), 9, 0)])
def test_bracket_mod(x, m, expected):
    assert bracket_mod(x, m) == expected


def test_mod_inverse():
    assert mod_inverse(3, 5) == 2
    assert mod_inverse(1, 7) == 1
    with pytest.raises(NotCoprime):
        mod_inverse(2, 4)


def test_bernoulli2():
    assert bernoulli2_periodized(F(0)) == F(1, 6)
    assert bernoulli2_periodized(F(1, 2)) == F(-1, 12)


@given(rationals)
def test_bernoulli2_periodic(x):
    assert bernoulli2_periodized(x) == bernoulli2_periodized(x + 1)


@given(rationals)
def test_sawtooth_odd_and_periodic(x):
    assert sawtooth(-x) == -sawtooth(x)
    assert sawtooth(x + 1) == sawtooth(x)


@given(rationals)
def test_floor_frac_decomposition(x):
    assert floor(x) + frac(x) == x
    assert 0 <= frac(x) < 1
    assert ceil(x) - 1 < x <= ceil(x)


@given(rationals, st.integers(1, 40))
def test_bracket_mod_range(x, m):
    r = bracket_mod(x, m)
    assert 0 <= r < m
    assert (x - r) / m == floor((x - r) / m)


@given(st.integers(-500, 500), st.integers(-500, 500))
def test_ext_gcd_bezout(a, b):
    g, s, t = ext_gcd(a, b)
    assert a * s + b * t == g >= 0


@pytest.mark.parametrize("text,value", [("3", F(3)), ("-7/2", F(-7, 2)), ("0", F(0)), ("6/4", F(3, 2))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "1/0", "1/-2", "+3", "1.5", "a", "1//2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ParseError):
        parse_rational(text)


@given(rationals)
def test_format_round_trip(x):
    assert parse_rational(format_rational(x)) == x


int64 = st.integers(-(2 ** 63), 2 ** 63 - 1)
pos64 = st.integers(1, 2 ** 63 - 1)


@settings(max_examples=1000)
@given(int64, pos64, int64, pos64)
def test_sum_is_exact_for_64_bit_operands(p, q, r, s):
    total = F(p, q) + F(r, s)
    assert total.numerator * q * s == (p * s + r * q) * total.denominator


@given(st.integers(-200, 200), st.integers(1, 200))
def test_mod_inverse_property(a, m):
    from math import gcd
    if gcd(a, m) != 1:
        with pytest.raises(NotCoprime):
            mod_inverse(a, m)
        return
    assert (a * mod_inverse(a, m)) % m == 1 % m


@given(rationals, st.integers(1, 30))
def test_bracket_is_scaled_fractional_part(x, m):
    assert bracket_mod(x, m) == m * frac(x / m)
