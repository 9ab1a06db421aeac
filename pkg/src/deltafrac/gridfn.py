"""Functions on shifted integer grids.

A grid is the set {origin, origin+1, origin+2, ...} for a rational origin.
A GridFunction is a finite window of exact values on consecutive grid
points, the common carrier for every discrete operator here.  Values are
Gamma polynomials so that sampled falling powers and rational tables live
in one representation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import DomainError, WindowTooShort
from .exact import (
    GammaPolynomial,
    RationalLike,
    _coerce_poly,
    as_rational,
    is_negative_integer,
    parse_gamma_polynomial,
    parse_rational,
)
from .special import falling

__all__ = [
    "Grid",
    "GridFunction",
    "sample_falling_power",
    "sample_closure",
    "delta_n",
]


@dataclass(frozen=True)
class Grid:
    """The shifted integer lattice {origin + k : k = 0, 1, 2, ...}."""

    origin: Fraction

    def point(self, k: int) -> Fraction:
        return self.origin + k


@dataclass(frozen=True, eq=True)
class GridFunction:
    """A finite window of exact values on consecutive grid points."""

    origin: Fraction
    values: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "origin", as_rational(self.origin))
        object.__setattr__(
            self, "values", tuple(_coerce_poly(v) for v in self.values)
        )
        if not self.values:
            raise WindowTooShort("a grid function needs at least one value")

    __hash__ = None

    def __len__(self) -> int:
        return len(self.values)

    def point(self, k: int) -> Fraction:
        return self.origin + k

    def points(self) -> list[Fraction]:
        return [self.origin + k for k in range(len(self.values))]

    def value(self, k: int) -> GammaPolynomial:
        return self.values[k]

    def index_of(self, t: RationalLike) -> int:
        """Window index of the grid point t; t must lie on the grid."""
        offset = as_rational(t) - self.origin
        if offset.denominator != 1 or offset < 0 or offset >= len(self.values):
            raise DomainError(f"point {t} is not in this window")
        return int(offset)

    def scale(self, q: RationalLike) -> "GridFunction":
        q = as_rational(q)
        return GridFunction(self.origin, tuple(v * q for v in self.values))

    def __add__(self, other: "GridFunction") -> "GridFunction":
        if not isinstance(other, GridFunction):
            return NotImplemented
        if self.origin != other.origin:
            raise DomainError("cannot add grid functions with different origins")
        n = min(len(self.values), len(other.values))
        return GridFunction(
            self.origin, tuple(self.values[i] + other.values[i] for i in range(n))
        )

    def __mul__(self, other) -> "GridFunction":
        if isinstance(other, GridFunction):
            if self.origin != other.origin:
                raise DomainError(
                    "cannot multiply grid functions with different origins"
                )
            n = min(len(self.values), len(other.values))
            return GridFunction(
                self.origin,
                tuple(self.values[i] * other.values[i] for i in range(n)),
            )
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def to_json_dict(self) -> dict:
        return {
            "origin": str(self.origin),
            "values": [v.render() for v in self.values],
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "GridFunction":
        return cls(
            parse_rational(doc["origin"]),
            tuple(parse_gamma_polynomial(text) for text in doc["values"]),
        )


def sample_falling_power(a: RationalLike, mu: RationalLike, length: int) -> GridFunction:
    """Sample (s - a) falling mu on its natural grid {a+mu, a+mu+1, ...}.

    The value at window index i is falling(mu + i, mu), which is finite for
    every i >= 0 as long as mu is not a negative integer.
    """
    a = as_rational(a)
    mu = as_rational(mu)
    if is_negative_integer(mu):
        raise DomainError("mu must not be a negative integer")
    if length < 1:
        raise WindowTooShort("length must be at least 1")
    values = tuple(
        falling(mu + i, mu).as_polynomial() for i in range(length)
    )
    return GridFunction(a + mu, values)


def sample_closure(
    a: RationalLike, length: int, source: Callable[[int], object]
) -> GridFunction:
    """Tabulate source(k) for k = 0..length-1 on the grid starting at a."""
    if length < 1:
        raise WindowTooShort("length must be at least 1")
    return GridFunction(as_rational(a), tuple(source(k) for k in range(length)))


def delta_n(f: GridFunction, n: int) -> GridFunction:
    """n-th forward difference, as the binomial-weighted sum.

    The window shrinks by n; the origin stays put.  delta_n(f, 0) is f.
    """
    if n < 0:
        raise DomainError("difference order must be a nonnegative integer")
    if n >= len(f):
        raise WindowTooShort(
            f"window of length {len(f)} cannot take a difference of order {n}"
        )
    if n == 0:
        return f
    signs = [(-1) ** (n - j) * math.comb(n, j) for j in range(n + 1)]
    values = []
    for k in range(len(f) - n):
        total = GammaPolynomial.zero()
        for j in range(n + 1):
            total = total + f.values[k + j] * signs[j]
        values.append(total)
    return GridFunction(f.origin, tuple(values))
