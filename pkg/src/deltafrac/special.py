"""Generalized falling functions and Pochhammer symbols over the rationals.

Both functions extend the classical integer-order products to arbitrary
rational order through Gamma ratios.  For non-classical orders the value
can be a finite Gamma monomial, an exact zero (the denominator Gamma pole
swallows the ratio) or an unresolved pole.  All three outcomes are first
class: SpecialValue keeps them distinct instead of collapsing poles into
exceptions, so identity checks can classify points honestly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import SpecialValuePole
from .exact import (
    GammaMonomial,
    GammaPolynomial,
    RationalLike,
    as_rational,
    gamma_of,
    is_negative_integer,
    is_nonpositive_integer,
    is_positive_integer,
)
from .report import (
    MISMATCH,
    VerificationReport,
    report_compare,
    report_excluded,
    report_pole,
)

__all__ = [
    "SpecialValue",
    "ZERO",
    "POLE_VALUE",
    "falling",
    "pochhammer",
    "falling_int",
    "poch_int",
    "gen_binomial",
    "compare_special",
    "falling_poch_bridge_check",
    "index_law_check",
]


@dataclass(frozen=True)
class SpecialValue:
    """Outcome of a generalized factorial: finite monomial, zero, or pole."""

    kind: str
    value: GammaMonomial | None = None

    @classmethod
    def finite(cls, monomial: GammaMonomial) -> "SpecialValue":
        if monomial.coeff == 0:
            return ZERO
        return cls("finite", monomial)

    @classmethod
    def from_rational(cls, q: RationalLike) -> "SpecialValue":
        q = as_rational(q)
        if q == 0:
            return ZERO
        return cls("finite", GammaMonomial(q))

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_zero(self) -> bool:
        return self.kind == "zero"

    @property
    def is_pole(self) -> bool:
        return self.kind == "pole"

    @property
    def monomial(self) -> GammaMonomial:
        if self.kind != "finite":
            raise SpecialValuePole(f"no finite value to take: {self.render()}")
        return self.value

    def as_polynomial(self) -> GammaPolynomial:
        if self.kind == "zero":
            return GammaPolynomial.zero()
        if self.kind == "finite":
            return GammaPolynomial.from_monomial(self.value)
        raise SpecialValuePole("cannot convert a pole to a polynomial")

    def as_fraction(self) -> Fraction:
        if self.kind == "zero":
            return Fraction(0)
        if self.kind == "finite":
            return self.value.as_fraction()
        raise SpecialValuePole("cannot convert a pole to a rational")

    def __mul__(self, other) -> "SpecialValue":
        if not isinstance(other, SpecialValue):
            return NotImplemented
        if self.is_pole or other.is_pole:
            return POLE_VALUE
        if self.is_zero or other.is_zero:
            return ZERO
        return SpecialValue.finite(self.value * other.value)

    def render(self) -> str:
        if self.kind == "zero":
            return "0"
        if self.kind == "pole":
            return "pole"
        return self.value.render()

    def __str__(self) -> str:
        return self.render()


ZERO = SpecialValue("zero")
POLE_VALUE = SpecialValue("pole")


def falling_int(x: RationalLike, k: int) -> Fraction:
    """The plain product x(x-1)...(x-k+1) for integer k >= 0."""
    x = as_rational(x)
    product = Fraction(1)
    for j in range(k):
        product *= x - j
    return product


def poch_int(x: RationalLike, k: int) -> Fraction:
    """The plain product x(x+1)...(x+k-1) for integer k >= 0."""
    x = as_rational(x)
    product = Fraction(1)
    for j in range(k):
        product *= x + j
    return product


def gen_binomial(alpha: RationalLike, n: int) -> Fraction:
    """Generalized binomial coefficient C(alpha, n) for integer n >= 0."""
    if n < 0:
        raise ValueError("lower index must be a nonnegative integer")
    return falling_int(alpha, n) / math.factorial(n)


def falling(x: RationalLike, y: RationalLike) -> SpecialValue:
    """Generalized falling function of x with order y.

    Cases, in priority order:
      1. y a positive integer: the product x(x-1)...(x-y+1), even when the
         Gamma-ratio form would be indeterminate.
      2. y = 0: one.
      3. neither x nor x - y a negative integer: Gamma(x+1)/Gamma(x+1-y).
      4. x not a negative integer but x - y one: exact zero (the
         denominator Gamma pole swallows the ratio).
      Anything else is an unresolved pole.
    """
    x = as_rational(x)
    y = as_rational(y)
    if is_positive_integer(y):
        return SpecialValue.from_rational(falling_int(x, int(y)))
    if y == 0:
        return SpecialValue.from_rational(1)
    top_pole = is_negative_integer(x)
    bottom_pole = is_negative_integer(x - y)
    if not top_pole and not bottom_pole:
        return SpecialValue.finite(gamma_of(x + 1) / gamma_of(x + 1 - y))
    if not top_pole and bottom_pole:
        return ZERO
    return POLE_VALUE


def pochhammer(x: RationalLike, y: RationalLike) -> SpecialValue:
    """Generalized Pochhammer symbol (x)_y.

    Cases, in priority order:
      1. y a positive integer: the product x(x+1)...(x+y-1).
      2. y = 0: one.
      3. neither x nor x + y a nonpositive integer: Gamma(x+y)/Gamma(x).
      4. x a nonpositive integer but x + y not: exact zero.
      Anything else is an unresolved pole.
    """
    x = as_rational(x)
    y = as_rational(y)
    if is_positive_integer(y):
        return SpecialValue.from_rational(poch_int(x, int(y)))
    if y == 0:
        return SpecialValue.from_rational(1)
    top_pole = is_nonpositive_integer(x + y)
    bottom_pole = is_nonpositive_integer(x)
    if not bottom_pole and not top_pole:
        return SpecialValue.finite(gamma_of(x + y) / gamma_of(x))
    if bottom_pole and not top_pole:
        return ZERO
    return POLE_VALUE


def compare_special(identity: str, params, lhs: SpecialValue, rhs: SpecialValue) -> VerificationReport:
    """Report on two SpecialValues: exact equality or matched pole class."""
    if lhs.is_pole and rhs.is_pole:
        return report_pole(identity, params, lhs.render(), rhs.render())
    if lhs.is_pole or rhs.is_pole:
        return VerificationReport(
            identity=identity,
            params=dict(params),
            status=MISMATCH,
            lhs=lhs.render(),
            rhs=rhs.render(),
        )
    return report_compare(identity, params, lhs.as_polynomial(), rhs.as_polynomial())


def falling_poch_bridge_check(t: RationalLike, alpha: RationalLike) -> VerificationReport:
    """Check the bridge (t + alpha - 1) falling alpha = (t)_alpha."""
    t = as_rational(t)
    alpha = as_rational(alpha)
    params = {"t": t, "alpha": alpha}
    lhs = falling(t + alpha - 1, alpha)
    rhs = pochhammer(t, alpha)
    return compare_special("bridge", params, lhs, rhs)


def index_law_check(t: RationalLike, alpha: RationalLike, beta: RationalLike) -> VerificationReport:
    """Check falling(t, alpha+beta) = falling(t-beta, alpha)*falling(t, beta).

    Only claimed when all three factors are finite; a zero or pole on
    either side excludes the point and names the offending factor.
    """
    t = as_rational(t)
    alpha = as_rational(alpha)
    beta = as_rational(beta)
    params = {"t": t, "alpha": alpha, "beta": beta}
    whole = falling(t, alpha + beta)
    left = falling(t - beta, alpha)
    right = falling(t, beta)
    for label, value in (
        ("falling(t, alpha+beta)", whole),
        ("falling(t-beta, alpha)", left),
        ("falling(t, beta)", right),
    ):
        if not value.is_finite:
            return report_excluded(
                "index-law", params, f"{label} is not finite ({value.render()})"
            )
    return report_compare(
        "index-law",
        params,
        whole.as_polynomial(),
        (left * right).as_polynomial(),
    )
