"""Verification reports shared by every identity checker."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exact import format_rational
from .laurent import LaurentPoly2
from .ratgen import GFTerm, RationalGF

IDENTITIES = ("carlitz", "thm1", "thm2", "thm3", "dedekind", "rademacher",
              "lemma4a", "lemma4b", "conic", "oracle")


def serialize(value: Any) -> Any:
    """Convert library values into JSON-compatible data."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, LaurentPoly2):
        return value.to_json()
    if isinstance(value, RationalGF):
        return value.to_json()
    if isinstance(value, GFTerm):
        return RationalGF((value,)).to_json()
    if isinstance(value, dict):
        return {str(k): serialize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [serialize(v) for v in value]
    if isinstance(value, str):
        return value
    raise TypeError(f"cannot serialize {type(value).__name__}")


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    params: dict
    holds: bool
    lhs: Any
    rhs: Any
    diff: Any = None
    notes: str = ""
    extra: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.identity not in IDENTITIES:
            raise ValueError(f"unknown identity {self.identity!r}")
        if self.holds != (self.diff is None):
            raise ValueError("holds must be True exactly when diff is absent")

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "params": serialize(self.params),
            "holds": self.holds,
            "lhs": serialize(self.lhs),
            "rhs": serialize(self.rhs),
            "diff": serialize(self.diff),
            "notes": self.notes,
        }

    def to_text(self) -> str:
        params = " ".join(f"{k}={serialize(v)}" for k, v in self.params.items())
        status = "PASS" if self.holds else "FAIL"
        line = f"[{status}] {self.identity} {params}"
        if self.notes:
            line += f" ({self.notes})"
        return line


def make_report(identity: str, params: dict, lhs, rhs, *, equal: bool | None = None,
                diff=None, notes: str = "", **extra) -> VerificationReport:
    """Build a report; ``diff`` defaults to ``lhs - rhs`` when the sides disagree."""
    holds = (lhs == rhs) if equal is None else equal
    if holds:
        diff = None
    elif diff is None:
        diff = lhs - rhs
    return VerificationReport(identity, dict(params), holds, lhs, rhs, diff, notes, extra)


def reports_to_json(reports) -> str:
    return json.dumps([r.to_json() for r in reports], indent=None, separators=(",", ":"))
