from fractions import Fraction as F

import pytest

from rcpoly.report import IDENTITIES, reports_to_json
from rcpoly.sweep import build_cases, convex_hull, random_cases, sweep, thm3_t_values
from rcpoly.geometry import pt


def test_thm3_small_sweep_holds():
    reports = sweep("thm3", max_n=10, cases=0, seed=0)
    assert reports and all(r.holds for r in reports)


def test_thm2_seeded_sweep_holds():
    reports = sweep("thm2", max_n=6, cases=50, seed=7)
    assert len(reports) == 52
    assert all(r.holds for r in reports)


@pytest.mark.parametrize("identity", IDENTITIES)
def test_same_seed_same_bytes(identity):
    a = reports_to_json(sweep(identity, max_n=4, cases=5, seed=11))
    b = reports_to_json(sweep(identity, max_n=4, cases=5, seed=11))
    assert a == b


def test_different_seed_different_cases():
    assert random_cases("thm1", 8, 10, 1) != random_cases("thm1", 8, 10, 2)


def test_parallel_matches_sequential():
    seq = sweep("conic", max_n=4, cases=10, seed=3, jobs=1)
    par = sweep("conic", max_n=4, cases=10, seed=3, jobs=3)
    assert reports_to_json(seq) == reports_to_json(par)


def test_grid_sizes():
    # 49-point grid per coprime pair, 25 for the conic grid
    assert len(build_cases("thm1", 3, 0)) == 7 * 49
    assert len(build_cases("conic", 3, 0)) == 7 * 25
    assert thm3_t_values(4)[:4] == [0, 1, 2, 3]
    assert all(0 <= t < 4 for t in thm3_t_values(4))
    assert len([t for t in thm3_t_values(4) if t.denominator > 1]) == 5


def test_thm1_random_cases_exercise_lattice_branch():
    cases = random_cases("thm1", 15, 500, 0)
    integral = sum((c["b"] * c["q"] - c["a"] * c["p"]).denominator == 1 for c in cases)
    assert integral >= 250


def test_bad_bounds():
    with pytest.raises(ValueError):
        build_cases("thm1", 0, 0)
    with pytest.raises(ValueError):
        build_cases("nope")


def test_convex_hull_drops_interior_and_collinear():
    hull = convex_hull([pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 1), pt(2, 2), pt(0, 2)])
    assert hull == [pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)]
    assert len(convex_hull([pt(0, 0), pt(1, 1), pt(2, 2)])) < 3
