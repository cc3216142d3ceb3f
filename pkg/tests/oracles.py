"""Naive reference implementations used only by the tests.

Each one re-derives a value straight from its definition with plain loops,
sharing no code with the library beyond ``fractions.Fraction``.
"""
from fractions import Fraction
import math


def saw(x: Fraction) -> Fraction:
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def rc_terms(a, b, s, t):
    """Exponent pairs (floor exponent, k) of RC by the defining sum."""
    start = math.ceil(Fraction(s))
    return sorted((math.floor((k * a + Fraction(t)) / b), k) for k in range(start, start + b))


def r_t(t, a, b):
    t = Fraction(t)
    return sum((saw((k * a + t) / b) * saw(Fraction(k, b)) for k in range(b)), Fraction(0))


def d_xy(a, b, x, y):
    x, y = Fraction(x), Fraction(y)
    return sum((saw((k + y) * a / b + x) * saw((k + y) / b) for k in range(b)), Fraction(0))


def lattice_points_in_triangle(p, q, r):
    """Scan the bounding box with a half-plane test written out in full."""
    def side(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    sign = 1 if side(p, q, r) > 0 else -1
    xs = [v[0] for v in (p, q, r)]
    ys = [v[1] for v in (p, q, r)]
    out = set()
    for m in range(math.ceil(min(xs)), math.floor(max(xs)) + 1):
        for n in range(math.ceil(min(ys)), math.floor(max(ys)) + 1):
            z = (m, n)
            if all(sign * side(a, b, z) >= 0 for a, b in ((p, q), (q, r), (r, p))):
                out.add(z)
    return out
