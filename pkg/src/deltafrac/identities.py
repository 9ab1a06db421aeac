"""Machine checks for the identities the library is built around.

Every verifier computes both sides of an identity along fully independent
paths (operator evaluation against closed form, product against series)
and returns a VerificationReport.  Checks are exact: a report says
``exact`` only when the formal difference of the two sides is the zero
Gamma polynomial.  Points an identity does not claim come back as
``domain_excluded`` with the violated precondition named, never silently
dropped and never counted as passes.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .errors import DenominatorPochhammerZero, DomainError, WindowTooShort
from .exact import (
    GammaPolynomial,
    RationalLike,
    as_rational,
    gamma_of,
    is_integer,
    is_negative_integer,
    is_nonpositive_integer,
    is_positive_integer,
)
from .fracops import FracOrder, OrderLike, frac_sum_diff, nabla_poch_diff, order_value
from .gridfn import GridFunction, delta_n, sample_falling_power
from .report import VerificationReport, report_compare, report_excluded
from .special import falling, falling_int, gen_binomial, poch_int

__all__ = [
    "binom_falling_check",
    "binom_poch_check",
    "power_rule_closed",
    "power_rule_verify",
    "corollary_closed",
    "gamma_sum_check",
    "nabla_zero_check",
    "alt_sum_lemma_check",
    "leibniz_verify",
    "leibniz_sweep",
    "prop_form1_check",
    "hyp3f2_terminating",
    "saalschutz_lhs",
    "saalschutz_hypothesis_violation",
    "saalschutz_verify",
]


def binom_falling_check(x: RationalLike, y: RationalLike, n: int) -> VerificationReport:
    """Binomial expansion of a falling power of a sum, order n >= 0."""
    x = as_rational(x)
    y = as_rational(y)
    if n < 0:
        raise DomainError("n must be a nonnegative integer")
    lhs = falling_int(x + y, n)
    rhs = Fraction(0)
    for k in range(n + 1):
        rhs += math.comb(n, k) * falling_int(x, n - k) * falling_int(y, k)
    return report_compare("binom-falling", {"x": x, "y": y, "n": n}, lhs, rhs)


def binom_poch_check(x: RationalLike, y: RationalLike, n: int) -> VerificationReport:
    """Binomial expansion of a rising power of a sum, order n >= 0."""
    x = as_rational(x)
    y = as_rational(y)
    if n < 0:
        raise DomainError("n must be a nonnegative integer")
    lhs = poch_int(x + y, n)
    rhs = Fraction(0)
    for k in range(n + 1):
        rhs += math.comb(n, k) * poch_int(x, n - k) * poch_int(y, k)
    return report_compare("binom-poch", {"x": x, "y": y, "n": n}, lhs, rhs)


def _validate_power_rule_params(mu: Fraction, nu: Fraction) -> None:
    if is_negative_integer(mu):
        raise DomainError(f"mu must not be a negative integer (got {mu})")
    if is_nonpositive_integer(nu):
        raise DomainError(f"nu must not be a nonpositive integer (got {nu})")


def power_rule_closed(
    a: RationalLike, mu: RationalLike, nu: OrderLike, n: int
) -> GammaPolynomial:
    """Closed form of the order-nu sum of a falling power, at offset n.

    The value at the n-th point of the output grid {a+mu+nu, ...} is
    Gamma(mu+1) * (mu+nu+1)_n / n!, a single Gamma monomial.
    """
    as_rational(a)
    mu = as_rational(mu)
    nu = order_value(nu)
    _validate_power_rule_params(mu, nu)
    if n < 0:
        raise DomainError("n must be a nonnegative integer")
    coeff = poch_int(mu + nu + 1, n) / math.factorial(n)
    return GammaPolynomial.from_monomial(gamma_of(mu + 1)) * coeff


def corollary_closed(
    a: RationalLike, mu: RationalLike, nu: OrderLike, n: int
) -> GammaPolynomial:
    """Falling-power form of the same closed value, at offset n.

    When mu + nu is not a negative integer this is
    Gamma(mu+1)/Gamma(mu+nu+1) * falling(mu+nu+n, mu+nu); when it is one,
    the value is identically zero once t reaches {a, a+1, ...}, that is
    for n >= -(mu+nu).
    """
    as_rational(a)
    mu = as_rational(mu)
    nu = order_value(nu)
    _validate_power_rule_params(mu, nu)
    if n < 0:
        raise DomainError("n must be a nonnegative integer")
    total_order = mu + nu
    if is_negative_integer(total_order):
        if n < -total_order:
            raise DomainError(
                "the vanishing form only covers n >= -(mu+nu)"
            )
        return GammaPolynomial.zero()
    prefactor = gamma_of(mu + 1) / gamma_of(total_order + 1)
    tail = falling(total_order + n, total_order).as_polynomial()
    return GammaPolynomial.from_monomial(prefactor) * tail


def power_rule_verify(
    a: RationalLike, mu: RationalLike, nu: OrderLike, n_max: int
) -> list[VerificationReport]:
    """Operator evaluation against the closed form, for every offset <= n_max.

    The left side runs the convolution over a sampled falling power; the
    right side is the closed monomial.  The two paths share nothing past
    the weight recurrence, so exact agreement is meaningful.
    """
    a = as_rational(a)
    mu = as_rational(mu)
    nu = order_value(nu)
    _validate_power_rule_params(mu, nu)
    if n_max < 0:
        raise DomainError("n_max must be a nonnegative integer")
    sampled = sample_falling_power(a, mu, n_max + 1)
    summed = frac_sum_diff(sampled, FracOrder(nu))
    reports = []
    for n in range(n_max + 1):
        reports.append(
            report_compare(
                "power-rule",
                {"a": a, "mu": mu, "nu": nu, "N": n},
                summed.values[n],
                power_rule_closed(a, mu, nu, n),
            )
        )
    return reports


def gamma_sum_check(mu: RationalLike, nu: RationalLike, n: int) -> VerificationReport:
    """Vanishing binomial cross-sum of two Pochhammer families.

    Checks sum(C(n,k) (nu)_{n-k} (mu+1)_k) = 0, which requires mu + nu to
    be a negative integer and holds from n = -(mu+nu) on.  Below that
    threshold the point is excluded and the nonzero sum is attached.
    """
    mu = as_rational(mu)
    nu = as_rational(nu)
    params = {"mu": mu, "nu": nu, "n": n}
    total_order = mu + nu
    if not is_negative_integer(total_order):
        raise DomainError(f"mu+nu must be a negative integer (got {total_order})")
    if is_negative_integer(mu):
        raise DomainError(f"mu must not be a negative integer (got {mu})")
    if is_nonpositive_integer(nu):
        raise DomainError(f"nu must not be a nonpositive integer (got {nu})")
    if n < 0:
        raise DomainError("n must be a nonnegative integer")
    total = Fraction(0)
    for k in range(n + 1):
        total += math.comb(n, k) * poch_int(nu, n - k) * poch_int(mu + 1, k)
    if n < -total_order:
        return report_excluded(
            "gamma-sum", params, "n must be at least -(mu+nu)", boundary=total
        )
    return report_compare("gamma-sum", params, total, 0)


def nabla_zero_check(
    a: RationalLike, p: RationalLike, alpha: RationalLike, t_index: int
) -> VerificationReport:
    """Vanishing of the nabla-kernel difference of a rising power.

    When alpha - p is a positive integer m, the difference vanishes for
    t_index >= 1 + m.  Below that threshold the value is generally
    nonzero; such points are excluded with the boundary value attached.
    """
    a = as_rational(a)
    p = as_rational(p)
    alpha = as_rational(alpha)
    params = {"a": a, "p": p, "alpha": alpha, "t_index": t_index}
    m = alpha - p
    if not is_positive_integer(m):
        raise DomainError(f"alpha - p must be a positive integer (got {m})")
    value = nabla_poch_diff(a, p, alpha, t_index)
    if t_index < 1 + int(m):
        return report_excluded(
            "nabla-zero",
            params,
            "t_index must be at least 1 + (alpha - p)",
            boundary=value,
        )
    return report_compare("nabla-zero", params, value, 0)


def alt_sum_lemma_check(
    g: GridFunction, alpha: RationalLike, k: int, t_index: int
) -> VerificationReport:
    """Alternating binomial sum of forward differences telescopes to a shift.

    Checks sum((-1)^n C(k,n) (delta^n g)(t - alpha - n)) = g(t - alpha - k)
    at t = origin + alpha + t_index, which needs t_index >= k and a window
    reaching index t_index.
    """
    alpha = as_rational(alpha)
    if k < 0:
        raise DomainError("k must be a nonnegative integer")
    params = {"alpha": alpha, "k": k, "t_index": t_index}
    if t_index < 0 or t_index > len(g) - 1:
        raise WindowTooShort(
            f"window of length {len(g)} does not reach index {t_index}"
        )
    if t_index < k:
        return report_excluded(
            "alt-sum", params, "t must lie on the shifted grid (t_index >= k)"
        )
    lhs = GammaPolynomial.zero()
    level = g
    for n in range(k + 1):
        term = level.values[t_index - n] * ((-1) ** n * math.comb(k, n))
        lhs = lhs + term
        if n < k:
            level = delta_n(level, 1)
    rhs = g.values[t_index - k]
    return report_compare("alt-sum", params, lhs, rhs)


def leibniz_sweep(
    f: GridFunction, g: GridFunction, alpha: OrderLike, t_max: int | None = None
) -> list[VerificationReport]:
    """Product-rule check at every admissible point of a shared window.

    The left side transforms the pointwise product once; the right side
    assembles binomially weighted transforms of f against iterated
    differences of g.  Tables are shared across the sweep.
    """
    alpha = order_value(alpha)
    if f.origin != g.origin:
        raise DomainError("f and g must share a grid origin")
    limit = min(len(f), len(g)) - 1
    if t_max is None:
        t_max = limit
    if t_max < 0:
        raise DomainError("t_max must be a nonnegative integer")
    if t_max > limit:
        raise WindowTooShort(
            f"windows of length {len(f)} and {len(g)} do not reach index {t_max}"
        )
    lhs_all = frac_sum_diff(f * g, FracOrder(alpha))
    transforms = [
        frac_sum_diff(f, FracOrder(alpha + n)) for n in range(t_max + 1)
    ]
    differences = [g]
    for n in range(1, t_max + 1):
        differences.append(delta_n(differences[n - 1], 1))
    reports = []
    for t in range(t_max + 1):
        rhs = GammaPolynomial.zero()
        for n in range(t + 1):
            weight = gen_binomial(-alpha, n)
            rhs = rhs + (
                transforms[n].values[t - n] * differences[n].values[t - n] * weight
            )
        reports.append(
            report_compare(
                "leibniz",
                {"alpha": alpha, "t_index": t},
                lhs_all.values[t],
                rhs,
            )
        )
    return reports


def leibniz_verify(
    f: GridFunction, g: GridFunction, alpha: OrderLike, t_index: int
) -> VerificationReport:
    """Product-rule check at a single output point."""
    if t_index < 0:
        raise DomainError("t_index must be a nonnegative integer")
    return leibniz_sweep(f, g, alpha, t_max=t_index)[-1]


def prop_form1_check(
    alpha: RationalLike, beta: RationalLike, gamma: RationalLike, n: int
) -> VerificationReport:
    """Gamma-ratio closed form of a binomially weighted double family.

    Checks, at offset n >= 0 with t = alpha + beta + gamma + n,

        Gamma(beta+gamma+1)/(n! Gamma(beta+1)) * (alpha+beta+gamma+1)_n
          = sum_j C(-alpha,j) (alpha+beta+j+1)_{n-j}/(n-j)!
                  * falling(gamma,j) * falling(beta+gamma+n-j, gamma-j)

    requiring alpha not a nonpositive integer and beta, beta+gamma not
    negative integers.  A pole inside a summand excludes the point.
    """
    alpha = as_rational(alpha)
    beta = as_rational(beta)
    gamma = as_rational(gamma)
    params = {"alpha": alpha, "beta": beta, "gamma": gamma, "N": n}
    if is_nonpositive_integer(alpha):
        raise DomainError(f"alpha must not be a nonpositive integer (got {alpha})")
    if is_negative_integer(beta):
        raise DomainError(f"beta must not be a negative integer (got {beta})")
    if is_negative_integer(beta + gamma):
        raise DomainError(
            f"beta+gamma must not be a negative integer (got {beta + gamma})"
        )
    if n < 0:
        raise DomainError("n must be a nonnegative integer")
    prefactor = gamma_of(beta + gamma + 1) / gamma_of(beta + 1)
    lhs = GammaPolynomial.from_monomial(prefactor) * (
        poch_int(alpha + beta + gamma + 1, n) / math.factorial(n)
    )
    rhs = GammaPolynomial.zero()
    for j in range(n + 1):
        coeff = (
            gen_binomial(-alpha, j)
            * poch_int(alpha + beta + j + 1, n - j)
            / math.factorial(n - j)
            * falling_int(gamma, j)
        )
        if coeff == 0:
            continue
        tail = falling(beta + gamma + n - j, gamma - j)
        if tail.is_pole:
            return report_excluded(
                "form1",
                params,
                f"falling(t-alpha-j, gamma-j) has a pole at j={j}",
            )
        rhs = rhs + tail.as_polynomial() * coeff
    return report_compare("form1", params, lhs, rhs)


def hyp3f2_terminating(
    a1: RationalLike,
    a2: RationalLike,
    m: int,
    b1: RationalLike,
    b2: RationalLike,
    z: RationalLike,
) -> Fraction:
    """Terminating 3F2 series: sum over k <= m of the Pochhammer ratio.

    The third upper parameter is -m, so the series stops after m+1 terms.
    Both lower parameters must keep their Pochhammer factors nonzero
    through k = m; a hit raises DenominatorPochhammerZero naming the
    first offending k.
    """
    a1 = as_rational(a1)
    a2 = as_rational(a2)
    b1 = as_rational(b1)
    b2 = as_rational(b2)
    z = as_rational(z)
    if m < 0:
        raise DomainError("m must be a nonnegative integer")
    for name, b in (("b1", b1), ("b2", b2)):
        if is_integer(b) and -m < b <= 0:
            first_zero_k = int(1 - b)
            raise DenominatorPochhammerZero(
                f"({name})_k vanishes at k={first_zero_k} for {name}={b}"
            )
    total = Fraction(0)
    for k in range(m + 1):
        numerator = (
            poch_int(a1, k) * poch_int(a2, k) * poch_int(-m, k) * z**k
        )
        denominator = (
            poch_int(b1, k) * poch_int(b2, k) * math.factorial(k)
        )
        total += numerator / denominator
    return total


def saalschutz_lhs(
    a: RationalLike, b: RationalLike, c: RationalLike, m: int
) -> Fraction:
    """Product side of the terminating summation: four Pochhammer runs."""
    a = as_rational(a)
    b = as_rational(b)
    c = as_rational(c)
    if m < 0:
        raise DomainError("m must be a nonnegative integer")
    denom_c = poch_int(c, m)
    if denom_c == 0:
        raise ZeroDivisionError(f"(c)_m vanishes for c={c}, m={m}")
    denom_cab = poch_int(c - a - b, m)
    if denom_cab == 0:
        raise ZeroDivisionError(f"(c-a-b)_m vanishes for c-a-b={c - a - b}, m={m}")
    return poch_int(c - a, m) * poch_int(c - b, m) / (denom_c * denom_cab)


def saalschutz_hypothesis_violation(
    a: RationalLike, b: RationalLike, c: RationalLike, m: int
) -> str | None:
    """Name the violated hypothesis, or None when the point is claimed."""
    a = as_rational(a)
    b = as_rational(b)
    c = as_rational(c)
    if m < 0:
        return "m must be a nonnegative integer"
    if is_nonpositive_integer(a):
        return "a must not be a nonpositive integer"
    if is_nonpositive_integer(c):
        return "c must not be a nonpositive integer"
    if is_negative_integer(c - a - 1):
        return "c-a-1 must not be a negative integer"
    if is_negative_integer(c - a - b - 1):
        return "c-a-b-1 must not be a negative integer"
    return None


def saalschutz_verify(
    a: RationalLike,
    b: RationalLike,
    c: RationalLike,
    m: int,
    force: bool = False,
) -> VerificationReport:
    """Product side against the terminating series, entirely in rationals.

    Outside the hypotheses the check raises DomainError unless ``force``
    is set, in which case the point is evaluated honestly and reported
    for whatever it turns out to be.
    """
    a = as_rational(a)
    b = as_rational(b)
    c = as_rational(c)
    params = {"a": a, "b": b, "c": c, "m": m}
    violation = saalschutz_hypothesis_violation(a, b, c, m)
    if violation is not None and not force:
        raise DomainError(violation)
    try:
        lhs = saalschutz_lhs(a, b, c, m)
        rhs = hyp3f2_terminating(a, b, m, c, 1 + a + b - c - m, 1)
    except (DenominatorPochhammerZero, ZeroDivisionError) as exc:
        return report_excluded("saalschutz", params, str(exc))
    return report_compare("saalschutz", params, lhs, rhs)
