from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from rcpoly.errors import DegenerateTriangle, InvalidPolygon, ParseError
from rcpoly.geometry import (ConvexRationalPolygon, brute_force_points, format_vertices,
                             parse_vertices, primitive_direction, pt, segment_ipt, triangle)
from rcpoly.laurent import LaurentPoly2

from oracles import lattice_points_in_triangle

x = LaurentPoly2.monomial(1, 0)
y = LaurentPoly2.monomial(0, 1)
ONE = LaurentPoly2.one()
UNIT_SQUARE = ConvexRationalPolygon((pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)))

coord = st.fractions(min_value=-4, max_value=4, max_denominator=4)
points = st.builds(pt, coord, coord)


def test_polygon_invariants():
    with pytest.raises(InvalidPolygon):
        ConvexRationalPolygon((pt(0, 0), pt(1, 1), pt(2, 2)))
    with pytest.raises(InvalidPolygon):
        ConvexRationalPolygon((pt(0, 0), pt(0, 1), pt(1, 0)))  # clockwise
    with pytest.raises(InvalidPolygon):
        ConvexRationalPolygon((pt(0, 0), pt(2, 0), pt(1, 1), pt(2, 2), pt(0, 2)))
    cw = ConvexRationalPolygon.from_points((pt(0, 0), pt(0, 1), pt(1, 0)))
    assert cw.vertices == (pt(1, 0), pt(0, 1), pt(0, 0))
    with pytest.raises(DegenerateTriangle):
        triangle(pt(0, 0), pt(1, 1), pt(3, 3))


def test_parse_and_format_vertices():
    vs = parse_vertices("0,0;5/2,1/2;1/2,3/2")
    assert vs == [pt(0, 0), pt(F(5, 2), F(1, 2)), pt(F(1, 2), F(3, 2))]
    assert format_vertices(vs) == "0,0;5/2,1/2;1/2,3/2"
    for bad in ("0,0;1", "0,0,1", "a,b", "1/0,1"):
        with pytest.raises(ParseError):
            parse_vertices(bad)


def test_primitive_direction():
    assert primitive_direction(F(4, 3), F(2, 3)) == (2, 1)
    assert primitive_direction(-6, 0) == (-1, 0)


def test_segment_examples():
    assert segment_ipt(pt(0, 0), pt(F(5, 2), F(5, 2))) == ONE + x * y + x * x * y * y
    assert segment_ipt(pt(F(1, 3), 0), pt(F(2, 3), 1)) == 0
    assert segment_ipt(pt(0, 0), pt(3, 0)) == ONE + x + x ** 2 + x ** 3


@given(points, points)
def test_segment_matches_scan(p, q):
    if p == q:
        return
    assert segment_ipt(p, q) == segment_ipt(q, p) == brute_force_points((p, q))


def test_brute_force_examples():
    assert brute_force_points(UNIT_SQUARE) == ONE + x + y + x * y
    half = (pt(F(1, 2), F(1, 2)), pt(F(5, 2), F(1, 2)), pt(F(1, 2), F(3, 2)))
    assert brute_force_points(half) == x * y
    thin = (pt(F(1, 10), F(1, 10)), pt(F(9, 10), F(1, 5)), pt(F(1, 2), F(9, 10)))
    assert brute_force_points(thin) == 0
    assert brute_force_points((0, 1, F(1, 2), F(5, 2))) == y + x * y + y * y + x * y * y


@given(points, points, points)
def test_brute_force_matches_independent_scan(a, b, c):
    from rcpoly.geometry import cross
    if cross(a, b, c) == 0:
        return
    expected = lattice_points_in_triangle((a.x, a.y), (b.x, b.y), (c.x, c.y))
    assert brute_force_points((a, b, c)) == LaurentPoly2.from_points(expected)


def test_contains_and_transforms():
    assert UNIT_SQUARE.contains(pt(F(1, 2), 1))
    assert not UNIT_SQUARE.contains(pt(F(1, 2), F(3, 2)))
    moved = UNIT_SQUARE.translate(2, -1)
    assert brute_force_points(moved) == (ONE + x + y + x * y).mul_monomial((2, -1))
    mirrored = UNIT_SQUARE.reflect_x()
    assert sorted(brute_force_points(mirrored).exponents()) == [(-1, 0), (-1, 1), (0, 0), (0, 1)]
