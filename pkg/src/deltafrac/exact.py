"""Exact scalar arithmetic: rationals and products of Gamma values.

Every scalar handled by this library is either an exact rational or a
finite sum of terms

    q * Gamma(b_1)**e_1 * ... * Gamma(b_r)**e_r

where q is rational, each base b_i is a rational in the open interval
(0, 1) and each exponent e_i is a nonzero integer.  Gamma at a positive
integer argument is folded into q as a factorial, so purely rational
quantities never carry Gamma factors.  Distinct bases are treated as
algebraically independent, which makes equality decidable: normalize both
sides and compare term maps.  The float path exists only as a cross-check
on the exact one, never as a substitute.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Union

from .errors import GammaPole

__all__ = [
    "Rational",
    "RationalLike",
    "parse_rational",
    "as_rational",
    "render_rational",
    "is_integer",
    "is_positive_integer",
    "is_nonpositive_integer",
    "is_negative_integer",
    "FactorSignature",
    "GammaMonomial",
    "GammaPolynomial",
    "gamma_of",
    "to_float",
    "parse_gamma_polynomial",
]

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")
_FACTOR_RE = re.compile(r"^G\((-?\d+(?:/\d+)?)\)\^(-?\d+)$")


def parse_rational(text: str) -> Fraction:
    """Parse a literal like ``3``, ``-5/2`` or ``0`` into an exact rational.

    The grammar is strict: an optional minus sign, decimal digits, and an
    optional ``/`` followed by a positive decimal denominator.  Anything
    else (floats, whitespace inside the number, a zero denominator) is
    rejected with ``ValueError``.
    """
    match = _RATIONAL_RE.match(text.strip())
    if match is None:
        raise ValueError(f"not a rational literal: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"zero denominator in rational literal: {text!r}")
    return Fraction(numerator, denominator)


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and rational literals. Floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def render_rational(q: RationalLike) -> str:
    return str(as_rational(q))


def is_integer(q: RationalLike) -> bool:
    return as_rational(q).denominator == 1


def is_positive_integer(q: RationalLike) -> bool:
    """True for 1, 2, 3, ..."""
    q = as_rational(q)
    return q.denominator == 1 and q >= 1


def is_nonpositive_integer(q: RationalLike) -> bool:
    """True for 0, -1, -2, ...  These are the poles of Gamma."""
    q = as_rational(q)
    return q.denominator == 1 and q <= 0


def is_negative_integer(q: RationalLike) -> bool:
    """True for -1, -2, -3, ..."""
    q = as_rational(q)
    return q.denominator == 1 and q <= -1


# A factor signature is the Gamma part of a monomial: base/exponent pairs,
# sorted by base, bases in (0, 1), exponents nonzero.  Signatures are the
# keys of GammaPolynomial term maps.
FactorSignature = "tuple[tuple[Fraction, int], ...]"


def _canonical_factors(factor_map: Mapping[Fraction, int]) -> tuple:
    return tuple(sorted((b, e) for b, e in factor_map.items() if e != 0))


def _merge_factors(left: tuple, right: tuple) -> tuple:
    merged: dict[Fraction, int] = dict(left)
    for base, exponent in right:
        merged[base] = merged.get(base, 0) + exponent
    return _canonical_factors(merged)


def _render_term(coeff: Fraction, factors: tuple) -> str:
    if not factors:
        return str(coeff)
    gammas = "*".join(f"G({base})^{exponent}" for base, exponent in factors)
    return f"{coeff}*{gammas}"


def _factors_float(factors: tuple) -> float:
    if not factors:
        return 1.0
    return math.exp(sum(e * math.lgamma(float(b)) for b, e in factors))


@dataclass(frozen=True)
class GammaMonomial:
    """A single term q * prod Gamma(b)^e in canonical form.

    The zero monomial is (0, ()).  A nonzero monomial with an empty factor
    tuple is a plain rational.
    """

    coeff: Fraction
    factors: tuple = ()

    def __post_init__(self) -> None:
        if not isinstance(self.coeff, Fraction):
            object.__setattr__(self, "coeff", as_rational(self.coeff))
        if self.coeff == 0 and self.factors:
            object.__setattr__(self, "factors", ())
            return
        previous = None
        for base, exponent in self.factors:
            if not isinstance(base, Fraction) or not (0 < base < 1):
                raise ValueError(f"Gamma base out of range (0, 1): {base}")
            if not isinstance(exponent, int) or exponent == 0:
                raise ValueError(f"bad Gamma exponent: {exponent}")
            if previous is not None and base <= previous:
                raise ValueError("factor bases must be strictly increasing")
            previous = base

    @classmethod
    def from_rational(cls, q: RationalLike) -> "GammaMonomial":
        return cls(as_rational(q))

    @classmethod
    def one(cls) -> "GammaMonomial":
        return cls(Fraction(1))

    @property
    def is_rational(self) -> bool:
        return not self.factors

    def as_fraction(self) -> Fraction:
        if self.factors:
            raise ValueError(f"not a rational value: {self.render()}")
        return self.coeff

    def __neg__(self) -> "GammaMonomial":
        return GammaMonomial(-self.coeff, self.factors)

    def __mul__(self, other) -> "GammaMonomial":
        if isinstance(other, GammaMonomial):
            coeff = self.coeff * other.coeff
            if coeff == 0:
                return GammaMonomial(Fraction(0))
            return GammaMonomial(coeff, _merge_factors(self.factors, other.factors))
        if isinstance(other, (int, Fraction)):
            coeff = self.coeff * as_rational(other)
            return GammaMonomial(coeff, self.factors if coeff else ())
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GammaMonomial":
        if isinstance(other, GammaMonomial):
            if other.coeff == 0:
                raise ZeroDivisionError("division by the zero monomial")
            inverse = GammaMonomial(
                1 / other.coeff, tuple((b, -e) for b, e in other.factors)
            )
            return self * inverse
        if isinstance(other, (int, Fraction)):
            return GammaMonomial(self.coeff / as_rational(other), self.factors)
        return NotImplemented

    def __pow__(self, exponent: int) -> "GammaMonomial":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent == 0:
            return GammaMonomial.one()
        if self.coeff == 0:
            if exponent < 0:
                raise ZeroDivisionError("zero monomial to a negative power")
            return self
        coeff = self.coeff ** exponent
        factors = _canonical_factors({b: e * exponent for b, e in self.factors})
        return GammaMonomial(coeff, factors)

    def float_value(self) -> float:
        return float(self.coeff) * _factors_float(self.factors)

    def render(self) -> str:
        return _render_term(self.coeff, self.factors)

    def __str__(self) -> str:
        return self.render()


def gamma_of(x: RationalLike) -> GammaMonomial:
    """Gamma(x) as a canonical monomial.

    Integer x >= 1 collapses to the rational (x-1)!.  Any other rational is
    shifted to its base b = x - floor(x) in (0, 1) through the recurrence
    Gamma(x+1) = x*Gamma(x), accumulating an exact rational coefficient.
    Nonpositive integers raise GammaPole.
    """
    x = as_rational(x)
    if is_integer(x):
        if x <= 0:
            raise GammaPole(f"Gamma pole at {x}")
        return GammaMonomial(Fraction(math.factorial(int(x) - 1)))
    shift = math.floor(x)
    base = x - shift
    coeff = Fraction(1)
    if shift > 0:
        for j in range(shift):
            coeff *= base + j
    else:
        for j in range(-shift):
            coeff /= x + j
    return GammaMonomial(coeff, ((base, 1),))


def _coerce_poly(value) -> "GammaPolynomial":
    if isinstance(value, GammaPolynomial):
        return value
    if isinstance(value, GammaMonomial):
        return GammaPolynomial.from_monomial(value)
    if isinstance(value, (int, Fraction)):
        return GammaPolynomial.from_rational(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as a Gamma polynomial")


class GammaPolynomial:
    """A finite sum of Gamma monomials, keyed by factor signature.

    The term map never stores zero coefficients; the zero polynomial is the
    empty map.  Instances are immutable by convention: every operation
    returns a fresh object, so values can be freely shared.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple, Fraction] | None = None):
        canonical: dict[tuple, Fraction] = {}
        if terms:
            for signature, coeff in terms.items():
                coeff = as_rational(coeff)
                if coeff != 0:
                    canonical[signature] = coeff
        self._terms = canonical

    @classmethod
    def zero(cls) -> "GammaPolynomial":
        return cls()

    @classmethod
    def from_rational(cls, q: RationalLike) -> "GammaPolynomial":
        q = as_rational(q)
        return cls({(): q} if q else None)

    @classmethod
    def from_monomial(cls, m: GammaMonomial) -> "GammaPolynomial":
        return cls({m.factors: m.coeff} if m.coeff else None)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> dict:
        return dict(self._terms)

    def monomials(self) -> Iterator[GammaMonomial]:
        for signature in sorted(self._terms):
            yield GammaMonomial(self._terms[signature], signature)

    def as_fraction(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1 and () in self._terms:
            return self._terms[()]
        raise ValueError(f"not a rational value: {self.render()}")

    def __add__(self, other) -> "GammaPolynomial":
        other = _coerce_poly(other)
        merged = dict(self._terms)
        for signature, coeff in other._terms.items():
            merged[signature] = merged.get(signature, Fraction(0)) + coeff
        return GammaPolynomial(merged)

    __radd__ = __add__

    def __neg__(self) -> "GammaPolynomial":
        return GammaPolynomial({s: -c for s, c in self._terms.items()})

    def __sub__(self, other) -> "GammaPolynomial":
        return self + (-_coerce_poly(other))

    def __rsub__(self, other) -> "GammaPolynomial":
        return _coerce_poly(other) + (-self)

    def __mul__(self, other) -> "GammaPolynomial":
        if isinstance(other, (int, Fraction)):
            q = as_rational(other)
            return GammaPolynomial({s: c * q for s, c in self._terms.items()})
        other = _coerce_poly(other)
        product: dict[tuple, Fraction] = {}
        for sig_a, coeff_a in self._terms.items():
            for sig_b, coeff_b in other._terms.items():
                signature = _merge_factors(sig_a, sig_b)
                product[signature] = (
                    product.get(signature, Fraction(0)) + coeff_a * coeff_b
                )
        return GammaPolynomial(product)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        try:
            other = _coerce_poly(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other) -> bool:
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None  # mutable-dict backed; identity-level hashing is a bug

    def to_float(self) -> float:
        """Float value via log-Gamma, summed in signature order.

        Summation order is fixed by the canonical signature ordering so the
        result is deterministic for a given term map.
        """
        total = 0.0
        for signature in sorted(self._terms):
            total += float(self._terms[signature]) * _factors_float(signature)
        return total

    def render(self) -> str:
        """Canonical string: terms sorted by signature, joined by ' + '.

        Negative coefficients stay inline ('3 + -2*G(1/2)^1'), so the
        rendering is a reversible encoding of the term map.
        """
        if not self._terms:
            return "0"
        return " + ".join(
            _render_term(self._terms[s], s) for s in sorted(self._terms)
        )

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"GammaPolynomial({self.render()!r})"


def to_float(p: GammaPolynomial) -> float:
    return _coerce_poly(p).to_float()


def parse_gamma_polynomial(text: str) -> GammaPolynomial:
    """Parse the canonical rendering back into a polynomial."""
    text = text.strip()
    if text == "0":
        return GammaPolynomial.zero()
    terms: dict[tuple, Fraction] = {}
    for chunk in text.split(" + "):
        pieces = chunk.split("*")
        coeff = parse_rational(pieces[0])
        factor_map: dict[Fraction, int] = {}
        for piece in pieces[1:]:
            match = _FACTOR_RE.match(piece)
            if match is None:
                raise ValueError(f"bad Gamma factor: {piece!r}")
            base = parse_rational(match.group(1))
            factor_map[base] = factor_map.get(base, 0) + int(match.group(2))
        signature = _canonical_factors(factor_map)
        terms[signature] = terms.get(signature, Fraction(0)) + coeff
    return GammaPolynomial(terms)
