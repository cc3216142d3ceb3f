"""Exact rational arithmetic and the elementary number-theoretic functions.

Rationals are :class:`fractions.Fraction` throughout; every function here
accepts ints or Fractions and never touches floating point.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import NotCoprime, ParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"3"``, ``"-7/2"``, ``"0"``; the result is always reduced."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ParseError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def is_integer(x) -> bool:
    return Fraction(x).denominator == 1


def floor(x) -> int:
    x = Fraction(x)
    return x.numerator // x.denominator


def ceil(x) -> int:
    return -floor(-Fraction(x))


def frac(x) -> Fraction:
    """Fractional part, in [0, 1)."""
    x = Fraction(x)
    return x - floor(x)


def sawtooth(x) -> Fraction:
    """((x)): frac(x) - 1/2 off the integers, 0 on them."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return frac(x) - Fraction(1, 2)


def bracket_mod(x, m: int) -> Fraction:
    """The least nonnegative rational congruent to ``x`` modulo ``m``."""
    if m < 1:
        raise ValueError("modulus must be positive")
    x = Fraction(x)
    return x - m * floor(x / m)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def mod_inverse(a: int, m: int) -> int:
    """The residue ``r`` in ``[0, m)`` with ``a*r = 1 (mod m)``; 0 when m == 1."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(a, m) != 1:
        raise NotCoprime(f"gcd({a}, {m}) != 1")
    if m == 1:
        return 0
    return pow(a, -1, m)


def bernoulli2_periodized(x) -> Fraction:
    """B2({x}) = {x}^2 - {x} + 1/6."""
    f = frac(x)
    return f * f - f + Fraction(1, 6)


def require_coprime(a: int, b: int) -> None:
    if math.gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) = {math.gcd(a, b)}, expected 1")
