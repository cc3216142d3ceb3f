"""Half-open cones, fundamental parallelograms and Brion's vertex-cone sum."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateCone
from .exact import as_rational, ceil, floor, require_coprime
from .geometry import ConvexRationalPolygon, RationalPoint, primitive_direction
from .laurent import LaurentPoly2
from .ratgen import GFTerm, RationalGF, gf_difference_numerator, gf_equal, gf_sum
from .report import VerificationReport, make_report
from .carlitz import segment_lattice_point

IntVector = tuple[int, int]


@dataclass(frozen=True)
class HalfOpenCone:
    """``apex + l1*g1 + l2*g2`` with ``l_i > 0`` if ``open_i`` else ``l_i >= 0``."""

    apex: RationalPoint
    g1: IntVector
    g2: IntVector
    open1: bool = False
    open2: bool = False

    def __post_init__(self):
        if self.det == 0:
            raise DegenerateCone(f"generators {self.g1} and {self.g2} are dependent")

    @property
    def det(self) -> int:
        return self.g1[0] * self.g2[1] - self.g1[1] * self.g2[0]

    def coordinates(self, m, n) -> tuple[Fraction, Fraction]:
        """Solve ``(m, n) = apex + l1*g1 + l2*g2`` for ``(l1, l2)`` exactly."""
        dx, dy = m - self.apex.x, n - self.apex.y
        (a, c), (b, d) = self.g1, self.g2  # columns g1 = (a, c), g2 = (b, d)
        det = self.det
        return (d * dx - b * dy) / det, (a * dy - c * dx) / det

    def _in_interval(self, lam: Fraction, is_open: bool, upper: bool) -> bool:
        if is_open:
            return 0 < lam and (lam <= 1 if upper else True)
        return 0 <= lam and (lam < 1 if upper else True)

    def in_parallelogram(self, m, n) -> bool:
        l1, l2 = self.coordinates(m, n)
        return self._in_interval(l1, self.open1, True) and self._in_interval(l2, self.open2, True)

    def contains(self, m, n) -> bool:
        l1, l2 = self.coordinates(m, n)
        return self._in_interval(l1, self.open1, False) and self._in_interval(l2, self.open2, False)


def parallelogram_points(cone: HalfOpenCone) -> list[tuple[int, int]]:
    """Integer points of the half-open fundamental parallelogram of ``cone``.

    Scans the rows of the bounding box; on each row the two coordinate
    constraints cut out an x-interval, and every candidate in it is then
    confirmed by the exact membership test.
    """
    a = cone.apex
    g1, g2 = cone.g1, cone.g2
    corners_x = [a.x, a.x + g1[0], a.x + g2[0], a.x + g1[0] + g2[0]]
    corners_y = [a.y, a.y + g1[1], a.y + g2[1], a.y + g1[1] + g2[1]]
    det = cone.det
    points = []
    for n in range(ceil(min(corners_y)), floor(max(corners_y)) + 1):
        # l1 = (g2y*dx - g2x*dy)/det, l2 = (g1x*dy - g1y*dx)/det with dx = m - apex.x
        lo, hi = min(corners_x), max(corners_x)
        dy = n - a.y
        for coef, const in ((Fraction(g2[1], det), Fraction(-g2[0], det) * dy),
                            (Fraction(-g1[1], det), Fraction(g1[0], det) * dy)):
            # lambda = coef * dx + const must lie in [0, 1]
            if coef == 0:
                if not 0 <= const <= 1:
                    lo, hi = 1, 0
                continue
            e0 = (0 - const) / coef + a.x
            e1 = (1 - const) / coef + a.x
            lo, hi = max(lo, min(e0, e1)), min(hi, max(e0, e1))
        for m in range(ceil(lo), floor(hi) + 1):
            if cone.in_parallelogram(m, n):
                points.append((m, n))
    return points


def cone_ipt(cone: HalfOpenCone) -> RationalGF:
    """Tiling: parallelogram transform over ``(1 - x^g1)(1 - x^g2)``."""
    num = LaurentPoly2.from_points(parallelogram_points(cone))
    return RationalGF.simple(num, [cone.g1, cone.g2])


def vertex_cones(poly: ConvexRationalPolygon) -> list[HalfOpenCone]:
    """Closed tangent cone at every vertex, spanned by primitive edge directions."""
    vs = poly.vertices
    n = len(vs)
    cones = []
    for i, v in enumerate(vs):
        nxt, prv = vs[(i + 1) % n], vs[i - 1]
        g1 = primitive_direction(nxt.x - v.x, nxt.y - v.y)
        g2 = primitive_direction(prv.x - v.x, prv.y - v.y)
        cones.append(HalfOpenCone(v, g1, g2))
    return cones


def brion_ipt(poly: ConvexRationalPolygon) -> RationalGF:
    """Sum of the vertex-cone transforms (Brion)."""
    return gf_sum(cone_ipt(c) for c in vertex_cones(poly))


def quadrant_gf(p, q) -> RationalGF:
    """Closed shifted quadrant ``(p, q) + R_{>=0}^2``."""
    return RationalGF.simple(LaurentPoly2.monomial(ceil(p), ceil(q)), [(1, 0), (0, 1)])


def conic_decomposition(a: int, b: int, p, q) -> tuple[RationalGF, tuple[int, int] | None]:
    """Transform of K1 + K2 + ray for the line of slope a/b through (p, q)."""
    require_coprime(a, b)
    p, q = as_rational(p), as_rational(q)
    apex = RationalPoint(p, q)
    k1 = HalfOpenCone(apex, (1, 0), (b, a), open1=True)
    k2 = HalfOpenCone(apex, (0, 1), (b, a), open1=True)
    parts = [cone_ipt(k1), cone_ipt(k2)]
    cd = segment_lattice_point(p, q, a, b)
    if cd is not None:
        parts.append(RationalGF.simple(LaurentPoly2.monomial(*cd), [(b, a)]))
    return gf_sum(parts), cd


def verify_conic_decomposition(a: int, b: int, p, q) -> VerificationReport:
    p, q = as_rational(p), as_rational(q)
    rhs, cd = conic_decomposition(a, b, p, q)
    lhs = quadrant_gf(p, q)
    equal = gf_equal(lhs, rhs)
    diff = None if equal else gf_difference_numerator(lhs, rhs)
    notes = f"t={b * q - a * p} ray={'yes' if cd else 'no'}"
    return make_report("conic", {"a": a, "b": b, "p": p, "q": q}, lhs, rhs,
                       equal=equal, diff=diff, notes=notes)



def verify_parallelogram_index(cone: HalfOpenCone) -> VerificationReport:
    """The half-open parallelogram holds exactly |det(g1, g2)| lattice points."""
    count = len(parallelogram_points(cone))
    params = {"kind": "cone", "apex": [cone.apex.x, cone.apex.y], "g1": list(cone.g1),
              "g2": list(cone.g2), "open1": cone.open1, "open2": cone.open2}
    return make_report("oracle", params, count, abs(cone.det), notes="parallelogram index")
