import json
from fractions import Fraction as F

import pytest

from rcpoly.laurent import LaurentPoly2
from rcpoly.report import VerificationReport, make_report


def test_holds_iff_no_diff():
    with pytest.raises(ValueError):
        VerificationReport("thm3", {}, True, 1, 1, diff=0)
    with pytest.raises(ValueError):
        VerificationReport("thm3", {}, False, 1, 2)
    with pytest.raises(ValueError):
        VerificationReport("nope", {}, True, 1, 1)


def test_make_report_diff():
    r = make_report("dedekind", {"a": 1}, F(1, 2), F(1, 3))
    assert not r.holds and r.diff == F(1, 6)
    assert make_report("dedekind", {"a": 1}, F(1, 2), F(1, 2)).diff is None


def test_json_schema():
    p = LaurentPoly2.monomial(1, 2, -3)
    r = make_report("carlitz", {"a": 2, "t": F(-1, 2)}, p, p, notes="chi=1")
    data = json.loads(json.dumps(r.to_json()))
    assert set(data) == {"identity", "params", "holds", "lhs", "rhs", "diff", "notes"}
    assert data["params"] == {"a": 2, "t": "-1/2"}
    assert LaurentPoly2.from_json(data["lhs"]) == p
    assert data["diff"] is None and data["holds"] is True


def test_text_line():
    r = make_report("thm3", {"a": 1, "b": 2, "t": F(1, 2)}, 0, 0, notes="chi=0")
    assert r.to_text() == "[PASS] thm3 a=1 b=2 t=1/2 (chi=0)"
