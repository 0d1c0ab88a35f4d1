"""Structured pass/fail records produced by the verification suites."""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class EvalReport:
    """Outcome of checking one identity instance.

    ``exact`` marks comparisons done in rational arithmetic, where the
    only meaningful tolerance is equality; numeric comparisons carry the
    absolute difference and the tolerance it was judged against.
    """

    identity_id: str
    lhs: str
    rhs: str
    abs_diff: float
    tolerance: float
    passed: bool
    runtime_ms: int
    exact: bool = False

    def to_dict(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_diff": self.abs_diff,
            "tolerance": "exact" if self.exact else self.tolerance,
            "pass": self.passed,
            "runtime_ms": self.runtime_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def exact_report(identity_id: str, lhs, rhs, runtime_ms: int) -> EvalReport:
    """Report for an exact comparison; passes only on equality.

    Sides may be rationals or any comparable structure of them; the
    numeric difference is reported when subtraction makes sense.
    """
    same = lhs == rhs
    if same:
        diff = 0.0
    else:
        try:
            diff = float(abs(lhs - rhs))
        except TypeError:
            diff = float("nan")
    return EvalReport(
        identity_id=identity_id,
        lhs=str(lhs),
        rhs=str(rhs),
        abs_diff=diff,
        tolerance=0.0,
        passed=same,
        runtime_ms=runtime_ms,
        exact=True,
    )


def numeric_report(
    identity_id: str, lhs: float, rhs: float, tolerance: float, runtime_ms: int
) -> EvalReport:
    """Report for a floating-point comparison at an absolute tolerance."""
    diff = abs(lhs - rhs)
    return EvalReport(
        identity_id=identity_id,
        lhs=repr(lhs),
        rhs=repr(rhs),
        abs_diff=diff,
        tolerance=tolerance,
        passed=diff <= tolerance,
        runtime_ms=runtime_ms,
    )
