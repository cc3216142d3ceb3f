"""Rational points, segments and convex polygons, plus the brute-force lattice oracle."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateTriangle, InvalidPolygon, ParseError
from .exact import as_rational, ceil, ext_gcd, floor, is_integer, parse_rational
from .laurent import LaurentPoly2

# scan budget for the bounding-box oracle
MAX_SCAN_POINTS = 10 ** 6


@dataclass(frozen=True, order=True)
class RationalPoint:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    def __add__(self, other: "RationalPoint") -> "RationalPoint":
        return RationalPoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "RationalPoint") -> "RationalPoint":
        return RationalPoint(self.x - other.x, self.y - other.y)

    def is_lattice(self) -> bool:
        return is_integer(self.x) and is_integer(self.y)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def pt(x, y) -> RationalPoint:
    return RationalPoint(as_rational(x), as_rational(y))


def cross(o: RationalPoint, a: RationalPoint, b: RationalPoint) -> Fraction:
    """z-component of (a - o) x (b - o)."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def primitive_direction(dx, dy) -> tuple[int, int]:
    """The primitive integer vector pointing along the rational vector (dx, dy)."""
    dx, dy = Fraction(dx), Fraction(dy)
    if dx == 0 and dy == 0:
        raise ValueError("zero vector has no direction")
    den = math.lcm(dx.denominator, dy.denominator)
    i, j = int(dx * den), int(dy * den)
    g = math.gcd(i, j)
    return i // g, j // g


@dataclass(frozen=True)
class ConvexRationalPolygon:
    """Strictly convex polygon with vertices listed counterclockwise."""

    vertices: tuple[RationalPoint, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        object.__setattr__(self, "vertices", vs)
        n = len(vs)
        if n < 3:
            raise InvalidPolygon("a polygon needs at least 3 vertices")
        if len(set(vs)) != n:
            raise InvalidPolygon("vertices must be distinct")
        for i in range(n):
            if cross(vs[i], vs[(i + 1) % n], vs[(i + 2) % n]) <= 0:
                raise InvalidPolygon("vertices must be strictly convex and counterclockwise")

    @classmethod
    def from_points(cls, points: Iterable[RationalPoint]) -> "ConvexRationalPolygon":
        """Accept either orientation; clockwise input is reversed."""
        vs = list(points)
        if len(vs) >= 3 and cross(vs[0], vs[1], vs[2]) < 0:
            vs.reverse()
        return cls(tuple(vs))

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[RationalPoint, RationalPoint]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def contains(self, p: RationalPoint) -> bool:
        return all(cross(a, b, p) >= 0 for a, b in self.edges())

    def bounding_box(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), max(xs), min(ys), max(ys)

    def translate(self, m: int, n: int) -> "ConvexRationalPolygon":
        return ConvexRationalPolygon(tuple(RationalPoint(v.x + m, v.y + n) for v in self.vertices))

    def reflect_x(self) -> "ConvexRationalPolygon":
        """Mirror across the y-axis (x -> -x); orientation is restored."""
        return ConvexRationalPolygon.from_points(RationalPoint(-v.x, v.y) for v in self.vertices)


def triangle(a: RationalPoint, b: RationalPoint, c: RationalPoint) -> ConvexRationalPolygon:
    if cross(a, b, c) == 0:
        raise DegenerateTriangle(f"collinear vertices {a}, {b}, {c}")
    return ConvexRationalPolygon.from_points((a, b, c))


def parse_vertices(text: str) -> list[RationalPoint]:
    """Parse ``"0,0;5/2,1/2;1/2,3/2"``."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        coords = chunk.split(",")
        if len(coords) != 2:
            raise ParseError(f"vertex must be 'x,y', got {chunk!r}")
        out.append(RationalPoint(parse_rational(coords[0]), parse_rational(coords[1])))
    return out


def format_vertices(vs: Sequence[RationalPoint]) -> str:
    from .exact import format_rational
    return ";".join(f"{format_rational(v.x)},{format_rational(v.y)}" for v in vs)


# -- integer-point transforms of simple pieces --------------------------------

def segment_ipt(p: RationalPoint, q: RationalPoint) -> LaurentPoly2:
    """Lattice points of the closed segment [p, q] via the line's integer equation."""
    if p == q:
        raise ValueError("segment endpoints must differ")
    dx, dy = q.x - p.x, q.y - p.y
    # normal (A, B), primitive, with A*x + B*y = C on the line
    ni, nj = primitive_direction(dy, -dx)
    A, B = ni, nj
    C = A * p.x + B * p.y
    if not is_integer(C):
        return LaurentPoly2.zero()
    C = int(C)
    g, s, t = ext_gcd(A, B)
    assert g == 1
    x0, y0 = C * s, C * t
    # lattice points: (x0 + k*B, y0 - k*A); position along segment is linear in k
    step = B * dx - A * dy  # (B, -A) . (dx, dy), nonzero
    base = (x0 - p.x) * dx + (y0 - p.y) * dy
    dd = dx * dx + dy * dy
    lo, hi = Fraction(-base, 1) / step, (dd - base) / step
    if lo > hi:
        lo, hi = hi, lo
    return LaurentPoly2.from_points((x0 + k * B, y0 - k * A) for k in range(ceil(lo), floor(hi) + 1))


def rectangle_ipt(x0, x1, y0, y1) -> LaurentPoly2:
    """Closed axis-parallel rectangle [x0, x1] x [y0, y1]."""
    xs = range(ceil(x0), floor(x1) + 1)
    ys = range(ceil(y0), floor(y1) + 1)
    return LaurentPoly2.from_points((m, n) for m in xs for n in ys)


def point_ipt(p: RationalPoint) -> LaurentPoly2:
    if p.is_lattice():
        return LaurentPoly2.monomial(int(p.x), int(p.y))
    return LaurentPoly2.zero()


# -- brute-force oracle -------------------------------------------------------

def _scan(x0, x1, y0, y1, member) -> LaurentPoly2:
    xs = range(ceil(x0), floor(x1) + 1)
    ys = range(ceil(y0), floor(y1) + 1)
    if len(xs) * len(ys) > MAX_SCAN_POINTS:
        raise ValueError(f"region too large for the scan oracle ({len(xs) * len(ys)} candidates)")
    return LaurentPoly2.from_points((m, n) for m in xs for n in ys if member(m, n))


def brute_force_points(region) -> LaurentPoly2:
    """Sum of x^m y^n over lattice points of a closed bounded region, by exhaustive scan.

    ``region`` is a :class:`ConvexRationalPolygon`, a sequence of three points
    (triangle), a pair of points (segment), or a 4-tuple of rationals
    ``(x0, x1, y0, y1)`` (box).
    """
    if isinstance(region, ConvexRationalPolygon):
        poly = region
    elif len(region) == 3 and all(isinstance(v, RationalPoint) for v in region):
        a, b, c = region
        if cross(a, b, c) == 0:
            raise DegenerateTriangle("collinear triangle")
        poly = ConvexRationalPolygon.from_points(region)
    elif len(region) == 2:
        p, q = region
        return _scan(min(p.x, q.x), max(p.x, q.x), min(p.y, q.y), max(p.y, q.y),
                     lambda m, n: cross(p, q, RationalPoint(m, n)) == 0)
    elif len(region) == 4:
        x0, x1, y0, y1 = (as_rational(v) for v in region)
        return _scan(x0, x1, y0, y1, lambda m, n: True)
    else:
        raise TypeError("unsupported region")
    edges = poly.edges()
    x0, x1, y0, y1 = poly.bounding_box()
    return _scan(x0, x1, y0, y1,
                 lambda m, n: all(cross(a, b, RationalPoint(m, n)) >= 0 for a, b in edges))
