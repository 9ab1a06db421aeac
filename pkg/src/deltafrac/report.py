"""Verification reports: the uniform result record for identity checks.

A report compares two exactly-computed values.  Status ``exact`` means the
formal difference is the zero polynomial; the float fields exist only to
cross-check the exact path and to classify near-misses honestly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .exact import GammaPolynomial, _coerce_poly, render_rational

__all__ = [
    "EXACT",
    "FLOAT_ONLY",
    "MISMATCH",
    "DOMAIN_EXCLUDED",
    "POLE",
    "FLOAT_RTOL",
    "VerificationReport",
    "report_compare",
    "report_excluded",
    "report_pole",
]

EXACT = "exact"
FLOAT_ONLY = "float_only"
MISMATCH = "mismatch"
DOMAIN_EXCLUDED = "domain_excluded"
POLE = "pole"

# Relative tolerance separating float_only from mismatch when a comparison
# fails formally.  Exact reports must also satisfy this bound; that is the
# cross-check on the float path itself.
FLOAT_RTOL = 1e-9


def _render_param(value) -> str:
    if isinstance(value, (int, Fraction)):
        return render_rational(value)
    return str(value)


@dataclass(frozen=True, eq=False)
class VerificationReport:
    identity: str
    params: Mapping[str, object]
    status: str
    lhs: str = ""
    rhs: str = ""
    abs_float_gap: float | None = None
    excluded_by: str | None = None
    lhs_float: float | None = field(default=None, repr=False)
    rhs_float: float | None = field(default=None, repr=False)

    @property
    def is_failure(self) -> bool:
        return self.status in (MISMATCH, FLOAT_ONLY)

    def params_rendered(self) -> list[tuple[str, str]]:
        return [(k, _render_param(v)) for k, v in self.params.items()]

    def to_json_dict(self) -> dict:
        doc: dict = {
            "identity": self.identity,
            "params": {k: v for k, v in self.params_rendered()},
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_float_gap": self.abs_float_gap,
        }
        if self.excluded_by is not None:
            doc["excluded_by"] = self.excluded_by
        return doc


def report_compare(identity: str, params: Mapping[str, object], lhs, rhs) -> VerificationReport:
    """Compare two values and classify the outcome.

    ``lhs`` and ``rhs`` may be GammaPolynomial, GammaMonomial, Fraction or
    int.  The comparison is exact; floats only grade a formal failure.
    """
    lhs = _coerce_poly(lhs)
    rhs = _coerce_poly(rhs)
    lhs_float = lhs.to_float()
    rhs_float = rhs.to_float()
    gap = abs(lhs_float - rhs_float)
    if (lhs - rhs).is_zero:
        status = EXACT
    elif gap <= FLOAT_RTOL * (1 + max(abs(lhs_float), abs(rhs_float))):
        status = FLOAT_ONLY
    else:
        status = MISMATCH
    return VerificationReport(
        identity=identity,
        params=dict(params),
        status=status,
        lhs=lhs.render(),
        rhs=rhs.render(),
        abs_float_gap=gap,
        lhs_float=lhs_float,
        rhs_float=rhs_float,
    )


def report_excluded(
    identity: str,
    params: Mapping[str, object],
    precondition: str,
    boundary=None,
) -> VerificationReport:
    """A parameter point the identity does not claim; names the precondition.

    ``boundary`` optionally carries the value computed at the excluded
    point (rendered into ``lhs``) so boundary behavior stays visible.
    """
    lhs = ""
    if boundary is not None:
        lhs = _coerce_poly(boundary).render()
    return VerificationReport(
        identity=identity,
        params=dict(params),
        status=DOMAIN_EXCLUDED,
        lhs=lhs,
        excluded_by=precondition,
    )


def report_pole(identity: str, params: Mapping[str, object], lhs: str, rhs: str) -> VerificationReport:
    return VerificationReport(
        identity=identity,
        params=dict(params),
        status=POLE,
        lhs=lhs,
        rhs=rhs,
    )
