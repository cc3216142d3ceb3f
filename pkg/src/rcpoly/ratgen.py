"""Rational generating functions: sums of ``numerator / prod(1 - x^g)``.

A :class:`RationalGF` is an honest transcript of a formula; nothing is
simplified on construction.  Semantics flow through :func:`gf_equal`,
:func:`gf_as_polynomial` and :func:`gf_eval`, all of which clear
denominators exactly.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotPolynomial, ParseError, PoleOrZeroBase, ZeroBase, ZeroVector
from .laurent import ExponentPair, LaurentPoly2

DenomFactor = tuple[int, int]


def is_canonical(g: ExponentPair) -> bool:
    return g[0] > 0 or (g[0] == 0 and g[1] > 0)


def canonicalize_factor(g: ExponentPair) -> tuple[DenomFactor, ExponentPair, int]:
    """Orient the factor ``1 - x^g`` canonically.

    Returns ``(g', shift, sign)`` such that
    ``1 / (1 - x^g) == sign * x^(-shift) / (1 - x^g')``.
    For canonical ``g`` this is ``(g, (0, 0), 1)``; otherwise it is
    ``(-g, g, -1)``, from ``1 - x^g = -x^g (1 - x^-g)``.
    """
    gu, gv = g
    if gu == 0 and gv == 0:
        raise ZeroVector("denominator factor 1 - x^0 vanishes identically")
    if is_canonical(g):
        return (gu, gv), (0, 0), 1
    return (-gu, -gv), (gu, gv), -1


def binomial(g: ExponentPair) -> LaurentPoly2:
    """The polynomial ``1 - x^g``."""
    return LaurentPoly2({(0, 0): 1, (g[0], g[1]): -1})


@dataclass(frozen=True)
class GFTerm:
    numerator: LaurentPoly2
    denominator: tuple[DenomFactor, ...] = ()

    def __post_init__(self):
        for g in self.denominator:
            if not is_canonical(g):
                raise ValueError(f"non-canonical factor {g}; build terms with GFTerm.make")

    @classmethod
    def make(cls, numerator: LaurentPoly2, factors: Iterable[ExponentPair] = ()) -> "GFTerm":
        """Build a term, canonicalizing each ``(1 - x^g)`` factor."""
        num = numerator
        den: list[DenomFactor] = []
        for g in factors:
            h, shift, sign = canonicalize_factor(tuple(g))
            if sign < 0:
                num = num.mul_monomial((-shift[0], -shift[1]), -1)
            den.append(h)
        return cls(num, tuple(sorted(den)))

    def denominator_poly(self) -> LaurentPoly2:
        out = LaurentPoly2.one()
        for g in self.denominator:
            out = out * binomial(g)
        return out


@dataclass(frozen=True)
class RationalGF:
    terms: tuple[GFTerm, ...] = ()

    @classmethod
    def of(cls, *terms: GFTerm) -> "RationalGF":
        return cls(tuple(terms))

    @classmethod
    def from_poly(cls, p: LaurentPoly2) -> "RationalGF":
        return cls((GFTerm(p),))

    @classmethod
    def simple(cls, numerator: LaurentPoly2, factors: Iterable[ExponentPair] = ()) -> "RationalGF":
        return cls((GFTerm.make(numerator, factors),))

    def __add__(self, other: "RationalGF") -> "RationalGF":
        return gf_add(self, other)

    def __neg__(self) -> "RationalGF":
        return RationalGF(tuple(GFTerm(-t.numerator, t.denominator) for t in self.terms))

    def __sub__(self, other: "RationalGF") -> "RationalGF":
        return gf_add(self, -other)

    def scale_monomial(self, e: ExponentPair, c: int = 1) -> "RationalGF":
        return RationalGF(tuple(GFTerm(t.numerator.mul_monomial(e, c), t.denominator)
                                for t in self.terms))

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {"terms": [{"num": t.numerator.to_json(), "den": [list(g) for g in t.denominator]}
                          for t in self.terms]}

    @classmethod
    def from_json(cls, data: dict) -> "RationalGF":
        try:
            return cls(tuple(GFTerm.make(LaurentPoly2.from_json(t["num"]),
                                         [(int(g[0]), int(g[1])) for g in t["den"]])
                             for t in data["terms"]))
        except (KeyError, TypeError, IndexError) as exc:
            raise ParseError(f"bad generating-function JSON: {exc}") from exc

    def to_text(self, names: tuple[str, str] = ("x", "y")) -> str:
        if not self.terms:
            return "0"
        parts = []
        for t in self.terms:
            num = t.numerator.to_text(names)
            if not t.denominator:
                parts.append(f"({num})")
                continue
            den = "*".join(f"(1 - {LaurentPoly2.monomial(*g).to_text(names)})"
                           for g in t.denominator)
            parts.append(f"({num})/({den})")
        return " + ".join(parts)


def gf_add(a: RationalGF, b: RationalGF) -> RationalGF:
    """Concatenate term lists; no simplification."""
    return RationalGF(a.terms + b.terms)


def gf_sum(parts: Iterable[RationalGF]) -> RationalGF:
    terms: list[GFTerm] = []
    for p in parts:
        terms.extend(p.terms)
    return RationalGF(tuple(terms))


def _multiset_max(a: Counter, b: Counter) -> Counter:
    return a | b


def _cofactor(target: Counter, have: Sequence[DenomFactor]) -> LaurentPoly2:
    missing = target - Counter(have)
    out = LaurentPoly2.one()
    for g, k in sorted(missing.items()):
        for _ in range(k):
            out = out * binomial(g)
    return out


def combine_over_common_denominator(a: RationalGF) -> GFTerm:
    """Cross-multiply every term up to the multiset-LCM of all denominators."""
    lcm: Counter = Counter()
    for t in a.terms:
        lcm = _multiset_max(lcm, Counter(t.denominator))
    num = LaurentPoly2.zero()
    for t in a.terms:
        num = num + t.numerator * _cofactor(lcm, t.denominator)
    return GFTerm(num, tuple(sorted(lcm.elements())))


def divide_by_binomial(p: LaurentPoly2, g: DenomFactor) -> LaurentPoly2 | None:
    """Exact quotient ``p / (1 - x^g)``, or None if the division leaves a remainder.

    Along each coset ``e + Z g`` the division is univariate in ``z = x^g``:
    it is exact iff the coefficients on that coset sum to zero, and the
    quotient coefficients are the running prefix sums.
    """
    gu, gv = g
    if not is_canonical(g):
        raise ValueError("divisor must be canonically oriented")
    cosets: dict[ExponentPair, dict[int, int]] = {}
    for (eu, ev), c in p.terms().items():
        k = eu // gu if gu else ev // gv
        rep = (eu - k * gu, ev - k * gv)
        line = cosets.setdefault(rep, {})
        line[k] = c
    quotient: dict[ExponentPair, int] = {}
    for (ru, rv), line in cosets.items():
        if sum(line.values()):
            return None
        ks = sorted(line)
        running = 0
        for k, k_next in zip(ks, ks[1:]):
            running += line[k]
            if running:
                for j in range(k, k_next):
                    quotient[(ru + j * gu, rv + j * gv)] = running
    return LaurentPoly2(quotient)


def _reduced_sum(a: RationalGF) -> tuple[LaurentPoly2, Counter]:
    """Running combination of the terms of ``a`` with eager exact cancellation.

    Mathematically the same fraction as :func:`combine_over_common_denominator`;
    factors are divided out as soon as the running numerator allows, which
    keeps the common denominator small when terms arrive in groups that sum
    to polynomials (as Brion decompositions do).
    """
    num = LaurentPoly2.zero()
    den: Counter = Counter()
    for t in a.terms:
        tden = Counter(t.denominator)
        new_den = _multiset_max(den, tden)
        num = num * _cofactor(new_den, list(den.elements())) \
            + t.numerator * _cofactor(new_den, t.denominator)
        den = new_den
        if not num:
            den = Counter()
            continue
        for g in sorted(den):
            while den[g]:
                q = divide_by_binomial(num, g)
                if q is None:
                    break
                num = q
                den[g] -= 1
        den = +den
    return num, den


def gf_equal(a: RationalGF, b: RationalGF) -> bool:
    """True iff ``a`` and ``b`` are the same rational function."""
    num, _ = _reduced_sum(gf_add(a, -b))
    return not num


def gf_difference_numerator(a: RationalGF, b: RationalGF) -> GFTerm:
    """``a - b`` as a single reduced fraction (useful for counterexample reports)."""
    num, den = _reduced_sum(gf_add(a, -b))
    return GFTerm(num, tuple(sorted(den.elements())))


def gf_as_polynomial(a: RationalGF) -> LaurentPoly2:
    """The Laurent polynomial represented by ``a``; raises NotPolynomial otherwise."""
    num, den = _reduced_sum(a)
    if den:
        raise NotPolynomial(f"irreducible denominator factors remain: {sorted(den.elements())}")
    return num


def gf_eval(a: RationalGF, x, y) -> Fraction:
    x, y = Fraction(x), Fraction(y)
    total = Fraction(0)
    for t in a.terms:
        try:
            n = t.numerator.eval(x, y)
            d = Fraction(1)
            for gu, gv in t.denominator:
                if (gu < 0 and x == 0) or (gv < 0 and y == 0):
                    raise PoleOrZeroBase(f"zero base in factor (1 - x^{gu} y^{gv})")
                d *= 1 - x ** gu * y ** gv
        except ZeroBase as exc:
            raise PoleOrZeroBase(str(exc)) from exc
        if d == 0:
            raise PoleOrZeroBase(f"pole at ({x}, {y})")
        total += n / d
    return total


def gf_map_exponents(a: RationalGF, matrix: tuple[tuple[int, int], tuple[int, int]],
                     shift: ExponentPair = (0, 0)) -> RationalGF:
    """Pull a generating function through the lattice map ``e -> matrix @ e + shift``.

    Numerator exponents are mapped affinely, denominator directions linearly;
    factors that flip orientation are re-canonicalized.
    """
    (m00, m01), (m10, m11) = matrix
    out = []
    for t in a.terms:
        num = t.numerator.map_exponents(matrix, shift)
        factors = [(m00 * gu + m01 * gv, m10 * gu + m11 * gv) for gu, gv in t.denominator]
        out.append(GFTerm.make(num, factors))
    return RationalGF(tuple(out))
