"""Discrete fractional sum and difference operators.

The central operator maps a window on {a, a+1, ...} to a window on
{a+nu, a+nu+1, ...} by convolving with the exact rational weights

    w_j = (nu)_j / j!

computed through the recurrence w_0 = 1, w_j = w_{j-1} (nu + j - 1) / j.
Positive orders are fractional sums, negative non-integer orders are
fractional differences; order zero and negative integers are excluded.
Two classical difference constructions are layered on top and agree on
their common domain, and a nabla-kernel evaluation completes the set.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError, SpecialValuePole, WindowTooShort
from .exact import (
    GammaPolynomial,
    RationalLike,
    as_rational,
    gamma_of,
    is_nonpositive_integer,
)
from .gridfn import GridFunction, delta_n
from .special import pochhammer

__all__ = [
    "FracOrder",
    "OrderLike",
    "conv_weights",
    "frac_sum_diff",
    "mr_frac_diff",
    "ae_frac_diff",
    "nabla_poch_diff",
]


@dataclass(frozen=True)
class FracOrder:
    """An admissible operator order: any rational except 0, -1, -2, ..."""

    nu: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "nu", as_rational(self.nu))
        if is_nonpositive_integer(self.nu):
            raise DomainError(
                f"nu must not be a nonpositive integer (got {self.nu})"
            )


OrderLike = Union[FracOrder, Fraction, int, str]


def order_value(nu: OrderLike) -> Fraction:
    if isinstance(nu, FracOrder):
        return nu.nu
    return FracOrder(as_rational(nu)).nu


def conv_weights(nu: OrderLike, count: int) -> list[Fraction]:
    """The first ``count`` convolution weights (nu)_j / j!."""
    nu = order_value(nu)
    weights = [Fraction(1)]
    for j in range(1, count):
        weights.append(weights[-1] * (nu + j - 1) / j)
    return weights


def frac_sum_diff(f: GridFunction, nu: OrderLike) -> GridFunction:
    """Fractional sum (nu > 0) or difference (nu < 0, non-integer) of f.

    Output index N holds sum(w_{N-i} * f_i for i <= N); the output window
    starts at f.origin + nu and has the same length as the input.
    """
    nu = order_value(nu)
    weights = conv_weights(nu, len(f))
    values = []
    for n in range(len(f)):
        total = GammaPolynomial.zero()
        for i in range(n + 1):
            total = total + f.values[i] * weights[n - i]
        values.append(total)
    return GridFunction(f.origin + nu, tuple(values))


def mr_frac_diff(f: GridFunction, mu: RationalLike) -> GridFunction:
    """Fractional difference of order mu in (0, 1), as the negative-order sum.

    The output lives on {a - mu, a - mu + 1, ...} with the input's length.
    """
    mu = as_rational(mu)
    if not (0 < mu < 1):
        raise DomainError(f"mu must lie strictly between 0 and 1 (got {mu})")
    return frac_sum_diff(f, FracOrder(-mu))


def ae_frac_diff(f: GridFunction, mu: RationalLike) -> GridFunction:
    """Fractional difference as an integer difference of a fractional sum.

    With n = ceil(mu), applies delta_n after a sum of order n - mu.  The
    output lives on {a + n - mu, ...} and is n points shorter than the
    input, so the window must contain at least n + 1 values.
    """
    mu = as_rational(mu)
    if mu <= 0 or mu.denominator == 1:
        raise DomainError(f"mu must be a positive non-integer (got {mu})")
    n = math.ceil(mu)
    if len(f) < n + 1:
        raise WindowTooShort(
            f"window of length {len(f)} is too short for order {mu} (needs {n + 1})"
        )
    return delta_n(frac_sum_diff(f, FracOrder(n - mu)), n)


def nabla_poch_diff(
    a: RationalLike, p: RationalLike, alpha: RationalLike, t_index: int
) -> GammaPolynomial:
    """Nabla-kernel fractional difference of the rising power (s - a)_p.

    Evaluates, at the point a + t_index with t_index >= 1,

        (1/Gamma(-alpha)) * sum_{j=1..t_index} (t_index-j+1)_{-alpha-1} (j)_p

    entirely in Gamma-monomial arithmetic.  The shift a cancels from the
    summand, so only t_index enters the value.  A pole in any summand
    raises SpecialValuePole rather than being silently dropped.
    """
    as_rational(a)
    p = as_rational(p)
    alpha = as_rational(alpha)
    if alpha.denominator == 1:
        raise DomainError(f"alpha must not be an integer (got {alpha})")
    if t_index < 1:
        raise DomainError(f"t_index must be at least 1 (got {t_index})")
    scale = gamma_of(-alpha) ** -1
    total = GammaPolynomial.zero()
    for j in range(1, t_index + 1):
        kernel = pochhammer(t_index - j + 1, -alpha - 1)
        sample = pochhammer(j, p)
        if kernel.is_pole or sample.is_pole:
            raise SpecialValuePole(
                f"summand at j={j} has an unresolved Gamma pole"
            )
        term = kernel * sample
        if term.is_zero:
            continue
        total = total + GammaPolynomial.from_monomial(term.monomial * scale)
    return total
