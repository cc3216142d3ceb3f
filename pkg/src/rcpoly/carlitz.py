"""Rademacher-Carlitz and Dedekind-Carlitz polynomials and their reciprocity laws.

Convention: :func:`rc` returns a polynomial whose first variable carries the
floor exponent and whose second variable carries the summation index ``k``.
Writing ``RC(v, u, ...)`` therefore means transposing the result.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroSlope
from .exact import as_rational, ceil, floor, is_integer, mod_inverse, require_coprime
from .laurent import ONE, U, V, LaurentPoly2
from .report import VerificationReport, make_report


@dataclass(frozen=True)
class LinearMapQ:
    """The affine map ``x -> (a*x + t) / b`` with integer ``a`` and ``b >= 1``."""

    a: int
    b: int
    t: Fraction = Fraction(0)

    def __post_init__(self):
        if self.b < 1:
            raise ValueError(f"denominator b must be positive, got {self.b}")
        object.__setattr__(self, "t", as_rational(self.t))

    def __call__(self, x) -> Fraction:
        return (self.a * Fraction(x) + self.t) / self.b


def inverse_map(f: LinearMapQ) -> LinearMapQ:
    """The inverse ``y -> (b*y - t) / a``, stored with a positive denominator."""
    if f.a == 0:
        raise ZeroSlope("a constant map has no inverse")
    if f.a > 0:
        return LinearMapQ(f.b, f.a, -f.t)
    return LinearMapQ(-f.b, -f.a, f.t)


def rc(s, f: LinearMapQ) -> LaurentPoly2:
    """Sum of ``u^floor(f(k)) v^k`` for ``k = ceil(s) .. ceil(s) + b - 1``."""
    start = ceil(as_rational(s))
    return LaurentPoly2.from_points(
        (floor((k * f.a + f.t) / f.b), k) for k in range(start, start + f.b)
    )


def dedekind_carlitz(a: int, b: int) -> LaurentPoly2:
    """Sum of ``u^floor(k*a/b) v^(k-1)`` for ``k = 1 .. b-1``."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    return LaurentPoly2.from_points(((k * a) // b, k - 1) for k in range(1, b))


def segment_lattice_point(p, q, a: int, b: int) -> tuple[int, int] | None:
    """The lattice point on the half-open segment from (p, q) to (p + b, q + a).

    Exists iff ``t = b*q - a*p`` is an integer.  Then ``c`` is the solution of
    ``a*c = -t (mod b)`` in ``[p, p + b)`` and ``d = (a*c + t) / b``.
    """
    require_coprime(a, b)
    p, q = as_rational(p), as_rational(q)
    t = b * q - a * p
    if not is_integer(t):
        return None
    t = int(t)
    r = (mod_inverse(a, b) * -t) % b
    c = r + b * ceil((p - r) / b)
    d, rem = divmod(a * c + t, b)
    assert rem == 0
    return c, d


def _thm1_sides(a: int, b: int, p: Fraction, q: Fraction):
    f = LinearMapQ(a, b, b * q - a * p)
    rc_p = rc(p, f).transpose()          # RC(v, u, p, f)
    rc_q = rc(q, inverse_map(f))         # RC(u, v, q, f^-1)
    lhs = V * (ONE - U) * rc_p + U * (ONE - V) * rc_q
    rhs = LaurentPoly2.monomial(ceil(p), ceil(q)) * (ONE - LaurentPoly2.monomial(b, a))
    cd = segment_lattice_point(p, q, a, b)
    if cd is not None:
        rhs = rhs - LaurentPoly2.monomial(*cd) * (ONE - U) * (ONE - V)
    return lhs, rhs, f.t, cd


def verify_thm1(a: int, b: int, p, q) -> VerificationReport:
    """Reciprocity for RC polynomials, with ``t := b*q - a*p`` so (p, q) lies on f."""
    require_coprime(a, b)
    p, q = as_rational(p), as_rational(q)
    lhs, rhs, t, cd = _thm1_sides(a, b, p, q)
    chi = int(cd is not None)
    notes = f"t={t} chi={chi}" + (f" c={cd[0]} d={cd[1]}" if cd else "")
    return make_report("thm1", {"a": a, "b": b, "p": p, "q": q}, lhs, rhs, notes=notes,
                       t=t, chi=chi, cd=cd)


def carlitz_sides(a: int, b: int) -> tuple[LaurentPoly2, LaurentPoly2]:
    lhs = (V - ONE) * dedekind_carlitz(a, b) + (U - ONE) * dedekind_carlitz(b, a).transpose()
    rhs = LaurentPoly2.monomial(a - 1, b - 1) - ONE
    return lhs, rhs


def verify_carlitz_reciprocity(a: int, b: int) -> VerificationReport:
    """``(v-1) c(u,v,a,b) + (u-1) c(v,u,b,a) = u^(a-1) v^(b-1) - 1``."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    require_coprime(a, b)
    lhs, rhs = carlitz_sides(a, b)
    return make_report("carlitz", {"a": a, "b": b}, lhs, rhs)

