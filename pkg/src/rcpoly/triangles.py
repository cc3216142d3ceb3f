"""Integer-point transforms of rational triangles and polygons.

Three independent routes are provided and cross-checked by the test suite:

* :func:`triangle_ipt_thm2`: closed form for an axis-parallel right triangle
  built from Rademacher-Carlitz polynomials;
* :func:`box_decomposition_ipt`: an arbitrary triangle as its bounding box
  minus corner right triangles, with shared edges added back;
* :func:`polygon_ipt`: fan triangulation plus Brion on each triangle.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .carlitz import LinearMapQ, inverse_map, rc
from .cones import brion_ipt
from .errors import DegenerateTriangle, InvalidTriangle
from .exact import ceil, floor
from .geometry import (ConvexRationalPolygon, RationalPoint, brute_force_points, cross,
                       format_vertices, point_ipt, rectangle_ipt, segment_ipt, triangle)
from .laurent import LaurentPoly2
from .ratgen import (RationalGF, gf_as_polynomial, gf_difference_numerator, gf_equal,
                     gf_map_exponents, gf_sum)
from .report import VerificationReport, make_report


@dataclass(frozen=True)
class RightTriangleParams:
    """Right angle at (e/f, g/h), east vertex (a/b, g/h), north vertex (e/f, c/d)."""

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int
    g: int
    h: int

    def __post_init__(self):
        for name in "abcdefgh":
            if getattr(self, name) < 1:
                raise InvalidTriangle(f"{name} must be a positive integer")
        if not Fraction(self.e, self.f) < Fraction(self.a, self.b):
            raise InvalidTriangle("need e/f < a/b")
        if not Fraction(self.g, self.h) < Fraction(self.c, self.d):
            raise InvalidTriangle("need g/h < c/d")

    @classmethod
    def from_list(cls, efghabcd) -> "RightTriangleParams":
        """Build from the CLI order ``e,f,g,h,a,b,c,d``."""
        e, f, g, h, a, b, c, d = efghabcd
        return cls(a=a, b=b, c=c, d=d, e=e, f=f, g=g, h=h)

    @classmethod
    def from_vertices(cls, corner: RationalPoint, east_x: Fraction, north_y: Fraction):
        return cls(a=east_x.numerator, b=east_x.denominator, c=north_y.numerator,
                   d=north_y.denominator, e=corner.x.numerator, f=corner.x.denominator,
                   g=corner.y.numerator, h=corner.y.denominator)

    @property
    def alpha(self) -> int:
        return self.d * self.h * (self.b * self.e - self.a * self.f)

    @property
    def beta(self) -> int:
        return self.b * self.f * (self.c * self.h - self.d * self.g)

    def vertices(self) -> tuple[RationalPoint, RationalPoint, RationalPoint]:
        corner = RationalPoint(Fraction(self.e, self.f), Fraction(self.g, self.h))
        east = RationalPoint(Fraction(self.a, self.b), Fraction(self.g, self.h))
        north = RationalPoint(Fraction(self.e, self.f), Fraction(self.c, self.d))
        return corner, east, north

    def polygon(self) -> ConvexRationalPolygon:
        return ConvexRationalPolygon(self.vertices())


def _line_map(slope_num: int, slope_den: int, intercept: Fraction) -> LinearMapQ:
    """``x -> (slope_num/slope_den) * x + intercept`` as a LinearMapQ."""
    if slope_den < 0:
        slope_num, slope_den = -slope_num, -slope_den
    return LinearMapQ(slope_num, slope_den, slope_den * intercept)


def hypotenuse_map(params: RightTriangleParams, intercept: str = "two-point") -> LinearMapQ:
    """The line through the east and north vertices.

    ``intercept="alternative"`` reproduces the alternative intercept
    ``c/d - e*alpha/(f*beta)``, kept only so tests can show it is wrong.
    """
    al, be = params.alpha, params.beta
    ef, cd = Fraction(params.e, params.f), Fraction(params.c, params.d)
    if intercept == "two-point":
        b0 = cd - Fraction(be, al) * ef
    elif intercept == "alternative":
        b0 = cd - ef * Fraction(al, be)
    else:
        raise ValueError(f"unknown intercept variant {intercept!r}")
    return _line_map(be, al, b0)


def triangle_ipt_thm2(params: RightTriangleParams, *, first_apex: str = "e/f",
                      intercept: str = "two-point") -> RationalGF:
    """Closed form of the transform of the right triangle as three cone terms.

    ``first_apex`` selects the x-exponent of the right-angle cone: ``"e/f"``
    (the apex of that cone, correct) or ``"a/b"`` (alternative variant).
    """
    al, be = params.alpha, params.beta
    ef, gh = Fraction(params.e, params.f), Fraction(params.g, params.h)
    if first_apex == "e/f":
        x0 = ceil(ef)
    elif first_apex == "a/b":
        x0 = ceil(Fraction(params.a, params.b))
    else:
        raise ValueError(f"unknown first-apex variant {first_apex!r}")
    line = hypotenuse_map(params, intercept)
    # rc(s, f) has f.b terms: |beta| rows for the east cone, |alpha| columns for the north one
    east_num = rc(gh, inverse_map(line))          # RC(x, y, g/h, l^-1)
    north_num = rc(ef, line).transpose()          # RC(y, x, e/f, l)
    return RationalGF.simple(LaurentPoly2.monomial(x0, ceil(gh)), [(1, 0), (0, 1)]) \
        + RationalGF.simple(east_num, [(-1, 0), (al, be)]) \
        + RationalGF.simple(north_num, [(0, -1), (-al, -be)])


# -- right triangles in arbitrary axis-parallel position ----------------------

def _right_angle_vertex(vs) -> int | None:
    """Index of the vertex whose two edges are axis-parallel, if any."""
    for i in range(3):
        r, p, q = vs[i], vs[(i + 1) % 3], vs[(i + 2) % 3]
        if (p.y == r.y and q.x == r.x) or (p.x == r.x and q.y == r.y):
            return i
    return None


def right_triangle_ipt(corner: RationalPoint, p: RationalPoint, q: RationalPoint) -> RationalGF:
    """Transform of an axis-parallel right triangle with its right angle at ``corner``.

    The triangle is reflected and integrally translated into the closed-form
    position, evaluated there, and pulled back by the inverse lattice map.
    """
    if p.x == corner.x:
        p, q = q, p
    if not (p.y == corner.y and q.x == corner.x and p.x != corner.x and q.y != corner.y):
        raise DegenerateTriangle("not an axis-parallel right triangle at the given corner")
    sx = 1 if p.x > corner.x else -1
    sy = 1 if q.y > corner.y else -1
    # image point = (sx*x + m, sy*y + n) with the corner landing in [1, 2)^2
    m = 1 - floor(sx * corner.x)
    n = 1 - floor(sy * corner.y)
    c_img = RationalPoint(sx * corner.x + m, sy * corner.y + n)
    params = RightTriangleParams.from_vertices(c_img, sx * p.x + m, sy * q.y + n)
    gf = triangle_ipt_thm2(params)
    # image exponent E maps back to (sx*(E_u - m), sy*(E_v - n))
    return gf_map_exponents(gf, ((sx, 0), (0, sy)), (-sx * m, -sy * n))


# -- bounding-box decomposition --------------------------------------------------

def box_decomposition(vertices) -> tuple[RationalGF, str]:
    """Transform of a triangle via its bounding box; returns ``(gf, notes)``.

    With B the box, R_i the corner pieces of B outside T and e_i the edge of
    T shared with R_i, inclusion-exclusion gives
    ``sigma_T = sigma_B - sum sigma_{R_i} + sum sigma_{e_i}`` (pieces meet
    only at vertices of T, whose corrections cancel).
    """
    vs = tuple(vertices)
    if len(vs) != 3:
        raise ValueError("need exactly three vertices")
    if cross(*vs) == 0:
        raise DegenerateTriangle("collinear vertices")
    i = _right_angle_vertex(vs)
    if i is not None:
        return right_triangle_ipt(vs[i], vs[(i + 1) % 3], vs[(i + 2) % 3]), "right triangle"

    xs, ys = [v.x for v in vs], [v.y for v in vs]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    corners = {RationalPoint(x, y) for x in (x0, x1) for y in (y0, y1)}
    at_corner = [v for v in vs if v in corners]
    box = RationalGF.from_poly(rectangle_ipt(x0, x1, y0, y1))

    def opposite(v: RationalPoint) -> RationalPoint:
        return RationalPoint(x0 + x1 - v.x, y0 + y1 - v.y)

    pair = next(((u, w) for u in at_corner for w in at_corner if w == opposite(u)), None)
    if pair is not None:
        return _two_corner_case(vs, pair, box, x0, x1, y0, y1)
    return _one_corner_case(vs, at_corner[0], box, x0, x1, y0, y1), "one corner"


def _one_corner_case(vs, v, box, x0, x1, y0, y1) -> RationalGF:
    x_opp = x1 if v.x == x0 else x0
    y_opp = y1 if v.y == y0 else y0
    others = [w for w in vs if w != v]
    p = next(w for w in others if w.x == x_opp)
    q = next(w for w in others if w is not p)
    assert q.y == y_opp
    pieces: list[RationalGF] = []
    edges: list[RationalGF] = []
    if p.y != v.y:
        pieces.append(right_triangle_ipt(RationalPoint(p.x, v.y), v, p))
        edges.append(RationalGF.from_poly(segment_ipt(v, p)))
    if q.x != v.x:
        pieces.append(right_triangle_ipt(RationalPoint(v.x, q.y), v, q))
        edges.append(RationalGF.from_poly(segment_ipt(v, q)))
    pieces.append(right_triangle_ipt(RationalPoint(x_opp, y_opp), p, q))
    edges.append(RationalGF.from_poly(segment_ipt(p, q)))
    return gf_sum([box] + [-r for r in pieces] + edges)


def _two_corner_case(vs, pair, box, x0, x1, y0, y1) -> tuple[RationalGF, str]:
    u, w = pair
    mid = next(v for v in vs if v != u and v != w)
    # the box corner on the far side of the diagonal from mid, and the one on its side
    c1, c2 = RationalPoint(u.x, w.y), RationalPoint(w.x, u.y)
    far, near = (c1, c2) if cross(u, w, c1) * cross(u, w, mid) < 0 else (c2, c1)
    if near != RationalPoint(w.x, u.y):
        u, w = w, u
    # near corner = (w.x, u.y); pieces on mid's side: two right triangles and a rectangle
    if mid.y == u.y or mid.x == w.x:
        # an edge of T runs along the box; the corner pieces degenerate
        return brion_ipt(triangle(*vs)), "fallback to Brion"
    far_piece = right_triangle_ipt(far, u, w)
    foot_u = RationalPoint(mid.x, u.y)
    foot_w = RationalPoint(w.x, mid.y)
    tri_u = right_triangle_ipt(foot_u, u, mid)
    tri_w = right_triangle_ipt(foot_w, mid, w)
    lo_x, hi_x = sorted((mid.x, w.x))
    lo_y, hi_y = sorted((u.y, mid.y))
    rect = RationalGF.from_poly(rectangle_ipt(lo_x, hi_x, lo_y, hi_y))
    near_region = gf_sum([tri_u, rect, tri_w,
                          -RationalGF.from_poly(segment_ipt(foot_u, mid)),
                          -RationalGF.from_poly(segment_ipt(mid, foot_w))])
    shared = gf_sum([RationalGF.from_poly(segment_ipt(u, w)),
                     RationalGF.from_poly(segment_ipt(u, mid)),
                     RationalGF.from_poly(segment_ipt(mid, w)),
                     -RationalGF.from_poly(point_ipt(mid))])
    return gf_sum([box, -far_piece, -near_region, shared]), "two corners"


def box_decomposition_ipt(vertices) -> RationalGF:
    return box_decomposition(vertices)[0]


# -- polygons -------------------------------------------------------------------

def polygon_ipt(poly: ConvexRationalPolygon) -> RationalGF:
    """Fan triangulation from vertex 0: triangles minus the shared diagonals."""
    vs = poly.vertices
    parts = [brion_ipt(ConvexRationalPolygon((vs[0], vs[i], vs[i + 1])))
             for i in range(1, len(vs) - 1)]
    parts += [-RationalGF.from_poly(segment_ipt(vs[0], vs[i])) for i in range(2, len(vs) - 1)]
    return gf_sum(parts)


def lattice_count(poly: ConvexRationalPolygon) -> int:
    return int(gf_as_polynomial(polygon_ipt(poly)).eval(1, 1))



# -- verifiers ------------------------------------------------------------------

def _params_of(vs) -> dict:
    return {"vertices": format_vertices(vs)}


def verify_thm2(params: RightTriangleParams) -> VerificationReport:
    """Closed form vs. Brion vs. lattice scan, plus the two alternative readings."""
    closed = triangle_ipt_thm2(params)
    brion = brion_ipt(params.polygon())
    oracle = brute_force_points(params.polygon())
    brion_poly = gf_as_polynomial(brion)
    path_ok = gf_equal(closed, brion)
    oracle_gf = RationalGF.from_poly(oracle)
    apex_ab_ok = gf_equal(triangle_ipt_thm2(params, first_apex="a/b"), oracle_gf)
    alt_intercept_ok = gf_equal(triangle_ipt_thm2(params, intercept="alternative"), oracle_gf)
    closed_poly = gf_as_polynomial(closed) if path_ok else None
    holds = path_ok and brion_poly == oracle
    if holds:
        diff = None
    elif brion_poly != oracle:
        diff = brion_poly - oracle
    else:
        diff = gf_difference_numerator(closed, brion)
    notes = (f"alpha={params.alpha} beta={params.beta} "
             f"ceil(e/f)-variant={'match' if holds else 'mismatch'} "
             f"ceil(a/b)-variant={'match' if apex_ab_ok else 'mismatch'} "
             f"alt-intercept={'match' if alt_intercept_ok else 'mismatch'}")
    p = {k: getattr(params, k) for k in "efghabcd"}
    return make_report("thm2", p, closed_poly if closed_poly is not None else closed, oracle,
                       equal=holds, diff=diff, notes=notes,
                       apex_ab_variant=apex_ab_ok, alt_intercept=alt_intercept_ok)


def verify_polygon_oracle(poly: ConvexRationalPolygon) -> VerificationReport:
    lhs = gf_as_polynomial(polygon_ipt(poly))
    rhs = brute_force_points(poly)
    count = rhs.eval(1, 1)
    holds = lhs == rhs and lhs.eval(1, 1) == count
    params = {"kind": "polygon", **_params_of(poly.vertices)}
    return make_report("oracle", params, lhs, rhs, equal=holds, notes=f"count={count}")


def verify_box_oracle(vertices) -> VerificationReport:
    vs = tuple(vertices)
    gf, how = box_decomposition(vs)
    lhs = gf_as_polynomial(gf)
    rhs = brute_force_points(vs)
    brion = brion_ipt(triangle(*vs))
    holds = lhs == rhs and gf_equal(gf, brion)
    diff = None if holds else (lhs - rhs if lhs != rhs else gf_difference_numerator(gf, brion))
    params = {"kind": "box", **_params_of(vs)}
    return make_report("oracle", params, lhs, rhs, equal=holds, diff=diff, notes=how)
