import math

import numpy as np
import pytest

from crosscoef.families import laguerre_connection_closed, laguerre_signed_integral
from crosscoef.oracle import (
    QuadratureRule,
    chebyshev_moment,
    gauss_chebyshev,
    gauss_from_coeffs,
    gauss_laguerre,
    gauss_legendre,
    laguerre_moment,
    legendre_moment,
    oracle_entry,
    oracle_table,
    signed_laguerre_rule,
)
from crosscoef.recurrence import FamilySpec


def test_one_point_legendre_is_midpoint():
    rule = gauss_legendre(1)
    assert rule.nodes[0] == pytest.approx(0.0, abs=1e-16)
    assert rule.weights[0] == pytest.approx(2.0, rel=1e-15)


def test_gauss_legendre_x4():
    rule = gauss_legendre(5)
    assert rule.integrate(rule.nodes**4) == pytest.approx(0.4, abs=1e-14)


def test_gauss_laguerre_x3():
    rule = gauss_laguerre(8, 0.0)
    assert rule.integrate(rule.nodes**3) == pytest.approx(6.0, abs=1e-12)


@pytest.mark.parametrize("K", [1, 2, 7, 20, 48])
@pytest.mark.parametrize("beta", [-0.5, 0.0, 1.0, 2.5])
def test_laguerre_monomial_exactness(K, beta):
    rule = gauss_laguerre(K, beta)
    for j in range(2 * K):
        got = rule.integrate(rule.nodes**j)
        assert abs(got / laguerre_moment(j, beta) - 1) <= 1e-12, j


@pytest.mark.parametrize("K", [1, 3, 16, 40])
def test_legendre_and_chebyshev_monomial_exactness(K):
    for rule, moment in [(gauss_legendre(K), legendre_moment), (gauss_chebyshev(K), chebyshev_moment)]:
        for j in range(2 * K):
            ref = moment(j)
            got = rule.integrate(rule.nodes**j)
            assert abs(got - ref) <= 1e-12 * max(abs(ref), 1.0), j


def test_chebyshev_rule_basics():
    rule = gauss_chebyshev(1)
    assert rule.nodes[0] == 0.0 and rule.weights[0] == pytest.approx(math.pi)
    for K in (1, 5, 12):
        assert gauss_chebyshev(K).integrate(np.ones(K)) == pytest.approx(math.pi, rel=1e-15)
    rule = gauss_chebyshev(2)
    assert rule.integrate(rule.nodes**2) == pytest.approx(math.pi / 2, rel=1e-15)


def test_rules_are_deterministic():
    seq = FamilySpec("laguerre", 0.5).coefficients()
    r1, r2 = gauss_from_coeffs(seq, 30), gauss_from_coeffs(seq, 30)
    assert np.array_equal(r1.nodes, r2.nodes) and np.array_equal(r1.weights, r2.weights)


def test_rule_invariants_enforced():
    with pytest.raises(ValueError):
        QuadratureRule(np.array([1.0, 0.0]), np.array([1.0, 1.0]))
    with pytest.raises(ValueError):
        QuadratureRule(np.array([0.0, 1.0]), np.array([1.0, -1.0]))
    with pytest.raises(ValueError):
        QuadratureRule(np.array([0.0, 1.0]), np.array([1.0]))
    QuadratureRule(np.array([0.0, 1.0]), np.array([1.0, -1.0]), signed=True)


def test_signed_rule_total_mass_vanishes():
    rule = signed_laguerre_rule(1.0, 4)
    assert rule.integrate(np.ones(len(rule))) == pytest.approx(0.0, abs=1e-14)
    with pytest.raises(ValueError):
        signed_laguerre_rule(0.0, 4)


def test_signed_oracle_entries():
    lag = FamilySpec("laguerre", 1.0)
    # mpmath quadrature of L~_2 L~_0 (1 - x) e^{-x} on (0, inf)
    assert oracle_entry(lag, lag, signed_laguerre_rule(1.0, 20), 2, 0) == pytest.approx(
        0.577350269189625764509, abs=1e-12
    )
    assert oracle_entry(lag, lag, signed_laguerre_rule(1.0, 20), 1, 0) == pytest.approx(
        laguerre_signed_integral(1, 0, 1.0), abs=1e-12
    )
    half = FamilySpec("laguerre", 0.5)
    assert abs(oracle_entry(half, half, signed_laguerre_rule(0.5, 20), 2, 2)) <= 1e-9


def test_identity_entry():
    leg = FamilySpec("legendre")
    assert oracle_entry(leg, leg, gauss_legendre(20), 3, 3) == pytest.approx(1.0, abs=1e-13)


def test_legendre_x2_entry():
    leg = FamilySpec("legendre")
    base = gauss_legendre(20)
    eta = QuadratureRule(base.nodes, base.weights * base.nodes**2)
    assert oracle_entry(leg, leg, eta, 1, 1) == pytest.approx(0.6, abs=1e-12)


def test_laguerre_connection_entry_mpmath_reference():
    got = oracle_entry(FamilySpec("laguerre", 2.5), FamilySpec("laguerre", 0.5),
                       gauss_laguerre(24, 0.5), 4, 2)
    # 30-digit mpmath quadrature
    assert got == pytest.approx(0.437959121161087143069, abs=1e-13)
    assert got == pytest.approx(laguerre_connection_closed(4, 2, 2.5, 0.5), abs=1e-10)


def test_oracle_symmetry():
    lag = FamilySpec("laguerre", 1.5)
    T = oracle_table(lag, lag, signed_laguerre_rule(1.5, 40), 15, 15, density_degree=1)
    assert np.abs(T - T.T).max() <= 1e-13 * max(1.0, np.abs(T).max())


def test_exactness_warning():
    leg = FamilySpec("legendre")
    with pytest.warns(RuntimeWarning):
        oracle_table(leg, leg, gauss_legendre(3), 6, 6)
