"""Report classification: exact, float_only, mismatch and serialization."""
from fractions import Fraction as Q

from deltafrac import (
    EXACT,
    FLOAT_ONLY,
    FLOAT_RTOL,
    MISMATCH,
    GammaPolynomial,
    gamma_of,
    report_compare,
)
from deltafrac.report import report_excluded, report_pole


def poly(m):
    return GammaPolynomial.from_monomial(m)


def test_exact_means_formal_zero():
    rep = report_compare("t", {"x": 1}, poly(gamma_of(Q(1, 2))), poly(gamma_of(Q(1, 2))))
    assert rep.status == EXACT
    assert rep.abs_float_gap == 0.0
    assert not rep.is_failure


def test_exact_across_different_routes():
    # Gamma(3/2) vs (1/2) Gamma(1/2): same canonical form
    lhs = poly(gamma_of(Q(3, 2)))
    rhs = Q(1, 2) * poly(gamma_of(Q(1, 2)))
    assert report_compare("t", {}, lhs, rhs).status == EXACT


def test_float_only_when_formally_distinct_but_numerically_close():
    # differ by 1e-30 relatively: formally nonzero, below the float gate
    rep = report_compare("t", {}, 1, Q(10**30 + 1, 10**30))
    assert rep.status == FLOAT_ONLY
    assert rep.is_failure
    assert rep.abs_float_gap <= FLOAT_RTOL * 2


def test_mismatch_when_values_differ():
    rep = report_compare("t", {}, 1, 2)
    assert rep.status == MISMATCH
    assert rep.is_failure
    assert rep.abs_float_gap == 1.0


def test_accepts_bare_rationals_and_monomials():
    assert report_compare("t", {}, Q(3, 2), GammaPolynomial.from_rational(Q(3, 2))).status == EXACT
    # bare GammaMonomial arguments are coerced too
    rep = report_compare("t", {}, gamma_of(Q(3, 2)), Q(1, 2) * poly(gamma_of(Q(1, 2))))
    assert rep.status == EXACT


def test_json_schema():
    rep = report_compare("power-rule", {"a": Q(0), "mu": Q(1, 2), "N": 3}, 1, 1)
    doc = rep.to_json_dict()
    assert doc == {
        "identity": "power-rule",
        "params": {"a": "0", "mu": "1/2", "N": "3"},
        "status": "exact",
        "lhs": "1",
        "rhs": "1",
        "abs_float_gap": 0.0,
    }


def test_excluded_report_carries_the_precondition():
    rep = report_excluded("gamma-sum", {"n": 1}, "n must be at least -(mu+nu)", boundary=Q(5))
    assert rep.status == "domain_excluded"
    assert rep.excluded_by == "n must be at least -(mu+nu)"
    assert rep.lhs == "5"
    doc = rep.to_json_dict()
    assert doc["excluded_by"] == "n must be at least -(mu+nu)"
    assert doc["abs_float_gap"] is None


def test_pole_report():
    rep = report_pole("bridge", {"t": Q(-1, 2)}, "pole", "pole")
    assert rep.status == "pole"
    assert not rep.is_failure


def test_float_cross_check_on_exact_reports():
    # an exact report's float gap must sit within the stated relative gate
    lhs = poly(gamma_of(Q(7, 2))) * Q(3, 5) + Q(2, 7)
    rhs = Q(3, 5) * poly(gamma_of(Q(7, 2))) + Q(2, 7)
    rep = report_compare("t", {}, lhs, rhs)
    assert rep.status == EXACT
    assert rep.abs_float_gap <= FLOAT_RTOL * (1 + abs(rep.lhs_float))
