"""Sparse bivariate Laurent polynomials with integer coefficients.

The data model is name-free: a polynomial is a finite map from exponent pairs
``(eu, ev)`` to nonzero integers.  Variable names only appear when printing
("u", "v" for Carlitz-type polynomials, "x", "y" for integer-point
transforms).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import ParseError, ZeroBase

ExponentPair = tuple[int, int]


def term_order_key(e: ExponentPair) -> tuple[int, int]:
    """Graded lexicographic key on (eu + ev, eu), ascending."""
    return (e[0] + e[1], e[0])


class LaurentPoly2:
    """Immutable sparse Laurent polynomial in two variables."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[ExponentPair, int] | Iterable[tuple[ExponentPair, int]] = ()):
        acc: dict[ExponentPair, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (eu, ev), c in items:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
            key = (int(eu), int(ev))
            acc[key] = acc.get(key, 0) + c
        self._terms = {k: c for k, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: dict[ExponentPair, int]) -> "LaurentPoly2":
        # caller guarantees: no zero coefficients, int keys
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, eu: int = 0, ev: int = 0, c: int = 1) -> "LaurentPoly2":
        return cls._from_clean({(eu, ev): c} if c else {})

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return cls._from_clean({})

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return cls.monomial(0, 0, 1)

    @classmethod
    def from_points(cls, points: Iterable[tuple[int, int]]) -> "LaurentPoly2":
        """Sum of monomials over a set of lattice points (duplicates collapse)."""
        return cls._from_clean({(int(m), int(n)): 1 for m, n in points})

    # -- container protocol -------------------------------------------------

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[ExponentPair, int]]:
        for e in sorted(self._terms, key=term_order_key):
            yield e, self._terms[e]

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, eu: int, ev: int) -> int:
        return self._terms.get((eu, ev), 0)

    def terms(self) -> dict[ExponentPair, int]:
        return dict(self._terms)

    def exponents(self) -> list[ExponentPair]:
        return sorted(self._terms, key=term_order_key)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly2.monomial(0, 0, other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations -----------------------------------------------------

    @staticmethod
    def _coerce(x) -> "LaurentPoly2":
        if isinstance(x, LaurentPoly2):
            return x
        if isinstance(x, int):
            return LaurentPoly2.monomial(0, 0, x)
        raise TypeError(f"cannot combine LaurentPoly2 with {type(x).__name__}")

    def __add__(self, other) -> "LaurentPoly2":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly2._from_clean(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2._from_clean({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly2":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly2":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly2":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[ExponentPair, int] = {}
        for (bu, bv), bc in b.items():
            for (au, av), ac in a.items():
                key = (au + bu, av + bv)
                out[key] = out.get(key, 0) + ac * bc
        return LaurentPoly2._from_clean({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly2":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = LaurentPoly2.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_monomial(self, e: ExponentPair, c: int = 1) -> "LaurentPoly2":
        """Shift every exponent by ``e`` and scale every coefficient by ``c``."""
        if c == 0:
            return LaurentPoly2.zero()
        du, dv = e
        return LaurentPoly2._from_clean(
            {(eu + du, ev + dv): k * c for (eu, ev), k in self._terms.items()}
        )

    def transpose(self) -> "LaurentPoly2":
        """Exchange the roles of the two variables."""
        return LaurentPoly2._from_clean({(ev, eu): c for (eu, ev), c in self._terms.items()})

    def map_exponents(self, matrix: tuple[tuple[int, int], tuple[int, int]],
                      shift: ExponentPair = (0, 0)) -> "LaurentPoly2":
        """Apply ``e -> matrix @ e + shift`` to every exponent.

        ``matrix`` must be injective on Z^2 (nonzero determinant) so that no
        two terms merge.
        """
        (m00, m01), (m10, m11) = matrix
        if m00 * m11 - m01 * m10 == 0:
            raise ValueError("exponent map must be invertible")
        su, sv = shift
        return LaurentPoly2._from_clean({
            (m00 * eu + m01 * ev + su, m10 * eu + m11 * ev + sv): c
            for (eu, ev), c in self._terms.items()
        })

    # -- evaluation ----------------------------------------------------------

    def eval(self, x, y) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        total = Fraction(0)
        for (eu, ev), c in self._terms.items():
            if (eu < 0 and x == 0) or (ev < 0 and y == 0):
                raise ZeroBase(f"negative exponent ({eu}, {ev}) at a zero argument")
            total += c * x ** eu * y ** ev
        return total

    # -- serialization -------------------------------------------------------

    def to_json(self) -> list[dict]:
        return [{"eu": eu, "ev": ev, "c": str(c)} for (eu, ev), c in self]

    @classmethod
    def from_json(cls, data: list[dict]) -> "LaurentPoly2":
        try:
            return cls(((int(t["eu"]), int(t["ev"])), int(t["c"])) for t in data)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad polynomial JSON: {exc}") from exc

    def to_text(self, names: tuple[str, str] = ("u", "v")) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for (eu, ev), c in self:
            factors = []
            for name, e in zip(names, (eu, ev)):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly2({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()


def poly_arith(op: str, a: LaurentPoly2, b: LaurentPoly2 | None = None) -> LaurentPoly2:
    """Dispatch ``add``, ``sub``, ``mul`` or ``negate`` by name."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "negate":
        return -a
    raise ValueError(f"unknown operation {op!r}")


# handy constants for writing identities
ONE = LaurentPoly2.one()
U = LaurentPoly2.monomial(1, 0)
V = LaurentPoly2.monomial(0, 1)
