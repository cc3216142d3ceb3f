"""Deterministic verification sweeps.

Each identity has a fixed parameter grid followed by ``cases`` pseudo-random
tuples drawn from :class:`~rcpoly.rng.SplitMix64`.  Every identity gets its own
stream (keyed by its position in :data:`IDENTITIES`), so ``verify all``
reproduces the per-identity runs exactly.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterator

from .carlitz import verify_carlitz_reciprocity, verify_thm1
from .cones import HalfOpenCone, verify_conic_decomposition, verify_parallelogram_index
from .dedekind import (verify_dedekind_reciprocity, verify_lemma4a, verify_lemma4b,
                       verify_rademacher_reciprocity, verify_thm3)
from .errors import RCPolyError
from .exact import is_integer
from .geometry import ConvexRationalPolygon, RationalPoint, cross, parse_vertices, pt
from .report import IDENTITIES, VerificationReport
from .rng import SplitMix64
from .triangles import (RightTriangleParams, verify_box_oracle, verify_polygon_oracle,
                        verify_thm2)

Case = tuple[str, dict]

DEFAULT_MAX = {
    "carlitz": 40, "thm1": 15, "thm2": 9, "thm3": 30, "dedekind": 100,
    "rademacher": 20, "lemma4a": 30, "lemma4b": 30, "conic": 12, "oracle": 6,
}
DEFAULT_CASES = {"thm1": 500, "thm2": 200, "oracle": 50}

THM1_GRID = [Fraction(v) for v in ("-2", "-5/4", "-1/2", "0", "1/3", "3/4", "2")]
RADEMACHER_GRID = [Fraction(v) for v in ("0", "1/2", "1/3", "2/3", "5/4")]
LEMMA4_T = ("0", "1", "1/2", "1/3", "7/5", "b-1")
CONIC_GRID = [Fraction(v) for v in ("-1", "-1/2", "0", "1/3", "7/4")]

ORACLE_POLYGONS = [
    "0,0;1,0;1,1;0,1",
    "1/2,1/2;5/2,1/2;1/2,3/2",
    "0,0;2,0;3,3/2;3/2,3;0,2",
    "1/3,1/3;7/3,2/3;1,5/2",
]
ORACLE_BOX_TRIANGLES = [
    "0,0;2,1;1,2",
    "1/3,1/3;7/3,2/3;1,5/2",
    "1/2,1/2;5/2,1/2;1/2,3/2",
    "0,0;3,1;1/2,5/2",
]


def coprime_pairs(n: int, *, lower: bool = False) -> Iterator[tuple[int, int]]:
    """Coprime (a, b) with 1 <= a, b <= n (a < b when ``lower``)."""
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if lower and not a < b:
                continue
            if math.gcd(a, b) == 1:
                yield a, b


def _random_pair(rng: SplitMix64, n: int, *, lower: bool = False) -> tuple[int, int]:
    while True:
        a, b = rng.randint(1, n), rng.randint(1, n)
        if lower and not a < b:
            continue
        if math.gcd(a, b) == 1:
            return a, b


def thm3_t_values(b: int) -> list[Fraction]:
    """Every integer in [0, b) and five non-integers with denominators 2, 3, 5."""
    ints = [Fraction(t) for t in range(b)]
    extra = [Fraction(1, 2), Fraction(1, 3), Fraction(2, 5), b - Fraction(1, 2), b - Fraction(1, 3)]
    return ints + extra


def random_convex_polygon(rng: SplitMix64, bound: int, max_den: int = 4) -> ConvexRationalPolygon:
    """Convex hull of 3..7 random rational points in [0, bound]^2, retried until 2-dimensional."""
    while True:
        k = rng.randint(3, 7)
        pts = {RationalPoint(rng.rational(0, bound, max_den), rng.rational(0, bound, max_den))
               for _ in range(k)}
        hull = convex_hull(pts)
        if len(hull) >= 3:
            return ConvexRationalPolygon(tuple(hull))


def convex_hull(points) -> list[RationalPoint]:
    """Counterclockwise strictly convex hull (monotone chain)."""
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts
    lower: list[RationalPoint] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[RationalPoint] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _random_cone(rng: SplitMix64) -> dict:
    while True:
        g1 = (rng.randint(-9, 9), rng.randint(-9, 9))
        g2 = (rng.randint(-9, 9), rng.randint(-9, 9))
        if g1[0] * g2[1] - g1[1] * g2[0] != 0:
            break
    apex = (rng.rational(-3, 3, 4), rng.rational(-3, 3, 4))
    return {"kind": "cone", "apex": apex, "g1": g1, "g2": g2,
            "open1": bool(rng.randint(0, 1)), "open2": bool(rng.randint(0, 1))}


def _random_triangle(rng: SplitMix64, bound: int) -> list[RationalPoint]:
    while True:
        vs = [RationalPoint(rng.rational(0, bound, 4), rng.rational(0, bound, 4)) for _ in range(3)]
        if cross(*vs) != 0:
            return vs


def _random_thm2(rng: SplitMix64, n: int) -> dict:
    while True:
        vals = {k: rng.randint(1, n) for k in "efghabcd"}
        if Fraction(vals["e"], vals["f"]) < Fraction(vals["a"], vals["b"]) and \
                Fraction(vals["g"], vals["h"]) < Fraction(vals["c"], vals["d"]):
            return vals


def grid_cases(identity: str, n: int) -> list[dict]:
    if identity == "carlitz":
        return [{"a": a, "b": b} for a, b in coprime_pairs(n)]
    if identity == "dedekind":
        return [{"a": a, "b": b} for a, b in coprime_pairs(n)]
    if identity == "thm1":
        return [{"a": a, "b": b, "p": p, "q": q}
                for a, b in coprime_pairs(n) for p in THM1_GRID for q in THM1_GRID]
    if identity == "thm2":
        return [{"e": 1, "f": 2, "g": 1, "h": 2, "a": 5, "b": 2, "c": 3, "d": 2},
                {"e": 1, "f": 1, "g": 1, "h": 1, "a": 3, "b": 1, "c": 2, "d": 1}]
    if identity == "thm3":
        return [{"a": a, "b": b, "t": t}
                for a, b in coprime_pairs(n, lower=True) for t in thm3_t_values(b)]
    if identity == "rademacher":
        return [{"a": a, "b": b, "x": x, "y": y}
                for a, b in coprime_pairs(n) for x in RADEMACHER_GRID for y in RADEMACHER_GRID
                if not (is_integer(x) and is_integer(y))]
    if identity in ("lemma4a", "lemma4b"):
        return [{"a": a, "b": b, "t": Fraction(b - 1) if t == "b-1" else Fraction(t)}
                for a, b in coprime_pairs(n) for t in LEMMA4_T]
    if identity == "conic":
        return [{"a": a, "b": b, "p": p, "q": q}
                for a, b in coprime_pairs(n) for p in CONIC_GRID for q in CONIC_GRID]
    if identity == "oracle":
        return ([{"kind": "polygon", "vertices": v} for v in ORACLE_POLYGONS]
                + [{"kind": "box", "vertices": v} for v in ORACLE_BOX_TRIANGLES])
    raise ValueError(f"unknown identity {identity!r}")


def random_cases(identity: str, n: int, cases: int, seed: int) -> list[dict]:
    from .geometry import format_vertices

    rng = SplitMix64(seed, IDENTITIES.index(identity) + 1)
    out: list[dict] = []
    for i in range(cases):
        if identity in ("carlitz", "dedekind"):
            a, b = _random_pair(rng, n)
            out.append({"a": a, "b": b})
        elif identity == "thm1":
            a, b = _random_pair(rng, n)
            p = rng.rational(-3, 3, 6)
            if i % 2 == 0:
                # integer t forces a lattice point on the line
                q = (a * p + rng.randint(-10, 10)) / b
            else:
                q = rng.rational(-3, 3, 6)
            out.append({"a": a, "b": b, "p": p, "q": q})
        elif identity == "thm2":
            out.append(_random_thm2(rng, n))
        elif identity == "thm3":
            a, b = _random_pair(rng, max(n, 2), lower=True)
            den = rng.randint(1, 6)
            out.append({"a": a, "b": b, "t": Fraction(rng.randint(0, b * den - 1), den)})
        elif identity == "rademacher":
            a, b = _random_pair(rng, n)
            while True:
                x, y = rng.rational(-2, 2, 6), rng.rational(-2, 2, 6)
                if not (is_integer(x) and is_integer(y)):
                    break
            out.append({"a": a, "b": b, "x": x, "y": y})
        elif identity in ("lemma4a", "lemma4b"):
            a, b = _random_pair(rng, n)
            out.append({"a": a, "b": b, "t": rng.rational(-3, 3, 6)})
        elif identity == "conic":
            a, b = _random_pair(rng, n)
            out.append({"a": a, "b": b, "p": rng.rational(-2, 2, 6), "q": rng.rational(-2, 2, 6)})
        elif identity == "oracle":
            poly = random_convex_polygon(rng, n)
            out.append({"kind": "polygon", "vertices": format_vertices(poly.vertices)})
            out.append({"kind": "box", "vertices": format_vertices(_random_triangle(rng, n))})
            for _ in range(4):
                out.append(_random_cone(rng))
        else:
            raise ValueError(f"unknown identity {identity!r}")
    return out


def build_cases(identity: str, max_n: int | None = None, cases: int | None = None,
                seed: int = 0) -> list[Case]:
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}")
    n = DEFAULT_MAX[identity] if max_n is None else max_n
    k = DEFAULT_CASES.get(identity, 0) if cases is None else cases
    if n < 1 or k < 0:
        raise ValueError("bounds must be positive and cases non-negative")
    return [(identity, p) for p in grid_cases(identity, n) + random_cases(identity, n, k, seed)]


def run_case(case: Case) -> VerificationReport:
    identity, p = case
    try:
        return _dispatch(identity, p)
    except RCPolyError as exc:
        from .report import make_report
        return make_report(identity, p, None, None, equal=False,
                           diff=f"{type(exc).__name__}: {exc}", notes="error")


def _dispatch(identity: str, p: dict) -> VerificationReport:
    if identity == "carlitz":
        return verify_carlitz_reciprocity(p["a"], p["b"])
    if identity == "thm1":
        return verify_thm1(p["a"], p["b"], p["p"], p["q"])
    if identity == "thm2":
        return verify_thm2(RightTriangleParams(**p))
    if identity == "thm3":
        return verify_thm3(p["a"], p["b"], p["t"])
    if identity == "dedekind":
        return verify_dedekind_reciprocity(p["a"], p["b"])
    if identity == "rademacher":
        return verify_rademacher_reciprocity(p["a"], p["b"], p["x"], p["y"])
    if identity == "lemma4a":
        return verify_lemma4a(p["a"], p["b"], p["t"])
    if identity == "lemma4b":
        return verify_lemma4b(p["a"], p["b"], p["t"])
    if identity == "conic":
        return verify_conic_decomposition(p["a"], p["b"], p["p"], p["q"])
    if identity == "oracle":
        kind = p["kind"]
        if kind == "polygon":
            return verify_polygon_oracle(ConvexRationalPolygon.from_points(parse_vertices(p["vertices"])))
        if kind == "box":
            return verify_box_oracle(parse_vertices(p["vertices"]))
        if kind == "cone":
            cone = HalfOpenCone(pt(*p["apex"]), tuple(p["g1"]), tuple(p["g2"]), p["open1"], p["open2"])
            return verify_parallelogram_index(cone)
    raise ValueError(f"unknown identity {identity!r}")


def sweep(identity: str, max_n: int | None = None, cases: int | None = None, seed: int = 0,
          jobs: int = 1) -> list[VerificationReport]:
    """Run one identity's grid plus seeded random cases; results in grid order."""
    work = build_cases(identity, max_n, cases, seed)
    if jobs <= 1 or len(work) < 2:
        return [run_case(c) for c in work]
    chunk = max(1, len(work) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_case, work, chunksize=chunk))


def sweep_all(max_n: int | None = None, cases: int | None = None, seed: int = 0,
              jobs: int = 1) -> list[VerificationReport]:
    out: list[VerificationReport] = []
    for identity in IDENTITIES:
        out.extend(sweep(identity, max_n, cases, seed, jobs))
    return out
