from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given, strategies as st

from rcpoly.cones import (HalfOpenCone, brion_ipt, cone_ipt, conic_decomposition,
                          parallelogram_points, quadrant_gf, verify_conic_decomposition,
                          verify_parallelogram_index, vertex_cones)
from rcpoly.errors import DegenerateCone, NotCoprime
from rcpoly.geometry import ConvexRationalPolygon, RationalPoint, pt
from rcpoly.laurent import LaurentPoly2
from rcpoly.ratgen import RationalGF, gf_as_polynomial, gf_equal, gf_eval

ONE = LaurentPoly2.one()
x = LaurentPoly2.monomial(1, 0)
y = LaurentPoly2.monomial(0, 1)
ORIGIN = pt(0, 0)


def test_parallelogram_examples():
    cone = HalfOpenCone(ORIGIN, (1, 0), (5, 3), open1=True)
    assert sorted(parallelogram_points(cone)) == [(1, 0), (2, 1), (4, 2)]
    assert parallelogram_points(HalfOpenCone(ORIGIN, (1, 0), (0, 1))) == [(0, 0)]
    with pytest.raises(DegenerateCone):
        HalfOpenCone(ORIGIN, (1, 2), (2, 4))


vec = st.tuples(st.integers(-7, 7), st.integers(-7, 7))
apex = st.builds(pt, st.fractions(-3, 3, max_denominator=5), st.fractions(-3, 3, max_denominator=5))


@given(apex, vec, vec, st.booleans(), st.booleans())
def test_parallelogram_index(a, g1, g2, o1, o2):
    if g1[0] * g2[1] - g1[1] * g2[0] == 0:
        return
    cone = HalfOpenCone(a, g1, g2, o1, o2)
    assert verify_parallelogram_index(cone).holds
    # independent membership scan over the bounding box
    xs = [a.x, a.x + g1[0], a.x + g2[0], a.x + g1[0] + g2[0]]
    ys = [a.y, a.y + g1[1], a.y + g2[1], a.y + g1[1] + g2[1]]
    import math
    scanned = [(m, n) for m in range(math.floor(min(xs)), math.ceil(max(xs)) + 1)
               for n in range(math.floor(min(ys)), math.ceil(max(ys)) + 1)
               if cone.in_parallelogram(m, n)]
    assert sorted(parallelogram_points(cone)) == sorted(scanned)


def test_cone_ipt_quadrant():
    q = cone_ipt(HalfOpenCone(ORIGIN, (1, 0), (0, 1)))
    assert gf_equal(q, RationalGF.simple(ONE, [(1, 0), (0, 1)]))


def _partial_sum(cone, x0, y0, radius):
    total = F(0)
    for m in range(-radius, radius + 1):
        for n in range(-radius, radius + 1):
            if cone.contains(m, n):
                total += F(x0) ** m * F(y0) ** n
    return total


def test_reflected_cone_against_truncated_series():
    # cone (-1,0),(0,1) at the origin: sum over m <= 0, n >= 0 of x^m y^n.
    # It converges for |x| > 1 and |y| < 1; evaluate at (2, 1/3).
    cone = HalfOpenCone(ORIGIN, (-1, 0), (0, 1))
    gf = cone_ipt(cone)
    exact = gf_eval(gf, 2, F(1, 3))
    assert exact == F(1) / (1 - F(1, 2)) / (1 - F(1, 3))
    partial = _partial_sum(cone, 2, F(1, 3), 50)
    # geometric tail bound: everything left out is below 2 * (1/2)^50 * 3/2 + 2 * (1/3)^50 * 2
    assert 0 < exact - partial < F(1, 2 ** 45)


def test_vertex_cones_unit_square():
    sq = ConvexRationalPolygon((pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)))
    gens = [frozenset((c.g1, c.g2)) for c in vertex_cones(sq)]
    assert gens == [frozenset({(1, 0), (0, 1)}), frozenset({(0, 1), (-1, 0)}),
                    frozenset({(-1, 0), (0, -1)}), frozenset({(0, -1), (1, 0)})]
    assert all(not c.open1 and not c.open2 for c in vertex_cones(sq))


def test_brion_examples():
    sq = ConvexRationalPolygon((pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)))
    assert gf_as_polynomial(brion_ipt(sq)) == ONE + x + y + x * y
    tri = ConvexRationalPolygon((pt(F(1, 2), F(1, 2)), pt(F(5, 2), F(1, 2)), pt(F(1, 2), F(3, 2))))
    assert gf_as_polynomial(brion_ipt(tri)) == x * y


def test_conic_examples():
    assert verify_conic_decomposition(1, 1, 0, 0).holds
    assert verify_conic_decomposition(3, 5, 0, 0).holds
    r = verify_conic_decomposition(2, 7, F(1, 3), F(-1, 4))
    assert r.holds and "ray=no" in r.notes
    _, cd = conic_decomposition(3, 5, 0, 0)
    assert cd == (0, 0)
    with pytest.raises(NotCoprime):
        verify_conic_decomposition(2, 6, 0, 0)


@given(st.integers(1, 7), st.integers(1, 7), st.fractions(-3, 3, max_denominator=6),
       st.fractions(-3, 3, max_denominator=6))
def test_conic_property(a, b, p, q):
    if gcd(a, b) == 1:
        assert verify_conic_decomposition(a, b, p, q).holds


def test_quadrant_gf():
    assert gf_eval(quadrant_gf(F(1, 2), F(-1, 3)), F(1, 2), F(1, 2)) == F(1, 2) * 4
