"""Dedekind, Dedekind-Rademacher and Rademacher two-parameter sums.

Every sum is evaluated by its defining O(b) summation.  The verifiers compare
that summation against a closed form and never share a code path with it.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import BothIntegers, OutOfRange, ZeroResidue
from .exact import (as_rational, bernoulli2_periodized, bracket_mod, floor, frac,
                    is_integer, mod_inverse, require_coprime, sawtooth)
from .report import VerificationReport, make_report


def _check_positive(**kw):
    for name, v in kw.items():
        if v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v}")


def dedekind_sum(a: int, b: int) -> Fraction:
    """s(a, b) = sum_{k=0}^{b-1} ((k a / b)) ((k / b))."""
    _check_positive(a=a, b=b)
    # ((r/b)) = (2r - b) / 2b for 0 < r < b, so the whole sum has denominator 4b^2
    total = 0
    for k in range(1, b):
        r = k * a % b
        if r:
            total += (2 * r - b) * (2 * k - b)
    return Fraction(total, 4 * b * b)


def dedekind_rademacher(t, a: int, b: int) -> Fraction:
    """r_t(a, b) = sum_{k=0}^{b-1} (((k a + t) / b)) ((k / b))."""
    _check_positive(a=a, b=b)
    t = as_rational(t)
    return sum((sawtooth((k * a + t) / b) * sawtooth(Fraction(k, b)) for k in range(b)),
               Fraction(0))


def rademacher_xy(a: int, b: int, x, y) -> Fraction:
    """d(a, b; x, y) = sum_{k=0}^{b-1} (((k + y) a / b + x)) (((k + y) / b))."""
    _check_positive(b=b)
    x, y = as_rational(x), as_rational(y)
    return sum((sawtooth((k + y) * a / b + x) * sawtooth((k + y) / b) for k in range(b)),
               Fraction(0))


def normalize_rademacher(t, a: int, b: int) -> tuple[Fraction, int, int]:
    """Reduce ``r_t(a, b)`` to ``r_{[t]_b}(a mod b, b)``; the value is unchanged."""
    _check_positive(a=a, b=b)
    t = as_rational(t)
    if b == 1:
        return bracket_mod(t, 1), a, 1
    if a % b == 0:
        raise ZeroResidue(f"{b} divides {a}")
    return bracket_mod(t, b), a % b, b


def dedekind_reciprocity_rhs(a: int, b: int) -> Fraction:
    return Fraction(-1, 4) + Fraction(1, 12) * (Fraction(a, b) + Fraction(1, a * b) + Fraction(b, a))


def verify_dedekind_reciprocity(a: int, b: int) -> VerificationReport:
    _check_positive(a=a, b=b)
    require_coprime(a, b)
    lhs = dedekind_sum(a, b) + dedekind_sum(b, a)
    return make_report("dedekind", {"a": a, "b": b}, lhs, dedekind_reciprocity_rhs(a, b))


def rademacher_rhs(a: int, b: int, x, y) -> Fraction:
    """Closed form of d(a,b;x,y) + d(b,a;y,x), valid unless x and y are both integers."""
    x, y = as_rational(x), as_rational(y)
    b2 = bernoulli2_periodized
    return sawtooth(x) * sawtooth(y) + Fraction(1, 2) * (
        Fraction(a, b) * b2(y) + Fraction(1, a * b) * b2(a * y + b * x) + Fraction(b, a) * b2(x)
    )


def verify_rademacher_reciprocity(a: int, b: int, x, y) -> VerificationReport:
    _check_positive(a=a, b=b)
    require_coprime(a, b)
    x, y = as_rational(x), as_rational(y)
    if is_integer(x) and is_integer(y):
        raise BothIntegers(f"x={x} and y={y} are both integers")
    lhs = rademacher_xy(a, b, x, y) + rademacher_xy(b, a, y, x)
    return make_report("rademacher", {"a": a, "b": b, "x": x, "y": y}, lhs,
                       rademacher_rhs(a, b, x, y))


def thm3_rhs(a: int, b: int, t) -> Fraction:
    """Closed form for r_{-t}(a, b) + r_t(b, a) when a < b and 0 <= t < b."""
    t = as_rational(t)
    chi = 1 if is_integer(t) else 0
    ft = floor(t)
    rhs = (Fraction(1, 12) * (Fraction(a, b) + Fraction(1, a * b) + Fraction(b, a))
           - Fraction(1, 4)
           + Fraction(ft * (ft + 1), 2 * a * b)
           - Fraction(floor(t / a), 2))
    if chi:
        a_inv = mod_inverse(a, b)
        b_inv = mod_inverse(b, a)
        rhs -= Fraction(1, 2) * (sawtooth(a_inv * t / b) + sawtooth(b_inv * t / a))
    return rhs


def verify_thm3(a: int, b: int, t) -> VerificationReport:
    _check_positive(a=a, b=b)
    require_coprime(a, b)
    t = as_rational(t)
    if not a < b:
        raise OutOfRange(f"need a < b, got a={a}, b={b}")
    if not 0 <= t < b:
        raise OutOfRange(f"need 0 <= t < b, got t={t}")
    lhs = dedekind_rademacher(-t, a, b) + dedekind_rademacher(t, b, a)
    chi = int(is_integer(t))
    return make_report("thm3", {"a": a, "b": b, "t": t}, lhs, thm3_rhs(a, b, t),
                       notes=f"chi={chi}", chi=chi)


def verify_lemma4a(a: int, b: int, t) -> VerificationReport:
    """sum_{k<b} {(a k + t)/b} = (b - 1)/2 + {t}."""
    _check_positive(a=a, b=b)
    require_coprime(a, b)
    t = as_rational(t)
    lhs = sum((frac((a * k + t) / b) for k in range(b)), Fraction(0))
    rhs = Fraction(b - 1, 2) + frac(t)
    return make_report("lemma4a", {"a": a, "b": b, "t": t}, lhs, rhs)


def verify_lemma4b(a: int, b: int, t) -> VerificationReport:
    """The k-weighted fractional-part sum expressed through r_t(a, b)."""
    _check_positive(a=a, b=b)
    require_coprime(a, b)
    t = as_rational(t)
    chi = 1 if is_integer(t) else 0
    lhs = sum((k * frac((a * k + t) / b) for k in range(b)), Fraction(0))
    rhs = (b * dedekind_rademacher(t, a, b) + Fraction(b * (b - 1), 4) + Fraction(b, 2) * frac(t)
           - Fraction(1, 2) * bracket_mod(t, b))
    if chi:
        rhs += Fraction(b, 2) * sawtooth(t * mod_inverse(a, b) / b)
    return make_report("lemma4b", {"a": a, "b": b, "t": t}, lhs, rhs,
                       notes=f"chi={chi}", chi=chi)
