import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import special as sps

from shotnoise.errors import DomainError, NumericalError
from shotnoise.special import (BESSEL_SWITCH, EvalResult, _log_bessel_asymptotic,
                               _log_bessel_series, bessel_i, gamma_fn, log_bessel_i,
                               mittag_leffler)

from oracle_values import BESSEL_I_HALF_2, ML_HALF_MINUS_ONE, ML_TABLE


# -- gamma ------------------------------------------------------------------

@pytest.mark.parametrize("x, want", [(1, 1.0), (5, 24.0), (0.5, math.sqrt(math.pi))])
def test_gamma_examples(x, want):
    assert gamma_fn(x) == pytest.approx(want, rel=1e-14)


def test_gamma_recurrence_on_log_grid():
    for x in np.geomspace(1e-3, 79.9, 200):
        assert gamma_fn(x + 1) == pytest.approx(x * gamma_fn(x), rel=1e-12)


def test_gamma_accuracy_against_log_gamma():
    for x in np.geomspace(1e-4, 170, 300):
        assert math.log(gamma_fn(x)) == pytest.approx(sps.gammaln(x), rel=1e-12, abs=1e-13)


@pytest.mark.parametrize("x", [0, -1, -0.5, float("nan")])
def test_gamma_domain(x):
    with pytest.raises(DomainError):
        gamma_fn(x)


def test_gamma_overflow():
    with pytest.raises(OverflowError):
        gamma_fn(172)


def test_gamma_error_bound():
    r = gamma_fn(3.3, full_output=True)
    assert isinstance(r, EvalResult)
    assert 0 <= r.abs_error_bound < 1e-12 * r.value


def test_eval_result_rejects_bad_bounds():
    with pytest.raises(NumericalError):
        EvalResult(1.0, -1.0)
    with pytest.raises(NumericalError):
        EvalResult(1.0, float("inf"))


# -- Mittag-Leffler -----------------------------------------------------------

def test_ml_exponential_case():
    assert mittag_leffler(1, -2) == pytest.approx(math.exp(-2), rel=1e-14)


@pytest.mark.parametrize("rho", [0.1, 0.5, 0.99, 1.0])
def test_ml_at_zero(rho):
    assert mittag_leffler(rho, 0.0) == 1.0


def test_ml_half_oracle():
    assert mittag_leffler(0.5, -1) == pytest.approx(ML_HALF_MINUS_ONE, abs=1e-13)


def test_ml_half_erfc_identity_wide_range():
    # E_{1/2}(-x) = exp(x^2) erfc(x)
    x = np.linspace(0, 50, 201)
    want = sps.erfcx(x)
    assert np.max(np.abs(mittag_leffler(0.5, -x) - want)) < 1e-10


@pytest.mark.parametrize("key", sorted(ML_TABLE))
def test_ml_against_extended_precision_partial_sums(key):
    rho, z = key
    assert mittag_leffler(rho, -z) == pytest.approx(ML_TABLE[key], abs=1e-9)


def test_ml_rho_one_against_exp():
    z = np.linspace(0, 5, 21)
    assert np.allclose(mittag_leffler(1.0, -z), np.exp(-z), atol=1e-15)


@pytest.mark.parametrize("rho", [0.2, 0.5, 0.8, 0.95])
def test_ml_monotone_and_in_range(rho):
    z = -np.linspace(0, 50, 400)
    v = mittag_leffler(rho, z)
    assert np.all(v > 0) and np.all(v <= 1)
    assert np.all(np.diff(v) <= 1e-15)


def test_ml_series_integral_agree_across_switch():
    from shotnoise.special import _ml_integral, _ml_series
    for rho in (0.3, 0.6, 0.9):
        x = np.array([0.5, 1.0, 2.0])
        s, _ = _ml_series(rho, x)
        i, _ = _ml_integral(rho, x ** (1 / rho))
        assert np.max(np.abs(s - i)) < 1e-10


def test_ml_error_bound_reported():
    r = mittag_leffler(0.7, np.array([-0.1, -3.0, -40.0]), full_output=True)
    assert np.all(r.abs_error_bound <= 1e-10)


@pytest.mark.parametrize("rho, z", [(0, -1), (1.5, -1), (-0.2, -1), (0.5, 0.1)])
def test_ml_domain(rho, z):
    with pytest.raises(DomainError):
        mittag_leffler(rho, z)


@settings(max_examples=60, deadline=None)
@given(st.floats(0.05, 1.0), st.floats(0.0, 50.0), st.floats(0.0, 5.0))
def test_ml_monotone_property(rho, a, d):
    assert mittag_leffler(rho, -(a + d)) <= mittag_leffler(rho, -a) + 1e-12


# -- modified Bessel I ----------------------------------------------------------

def test_bessel_examples():
    assert bessel_i(0, 0) == 1.0
    assert bessel_i(1, 0) == 0.0


def test_bessel_half_closed_form():
    assert bessel_i(0.5, 2) == pytest.approx(BESSEL_I_HALF_2, rel=1e-13)


@pytest.mark.parametrize("nu", [-1.0, -0.5, 0.0, 0.3, 1.0, 2.5, 7.0])
def test_bessel_against_scipy(nu):
    for x in np.concatenate([np.geomspace(1e-3, 50, 60), [BESSEL_SWITCH]]):
        assert bessel_i(nu, x) == pytest.approx(sps.iv(nu, x), rel=1e-10)


def test_bessel_recurrence():
    for nu in (0.5, 1.0, 2.3, 4.0):
        for x in np.geomspace(0.05, 60, 40):
            lhs = bessel_i(nu - 1, x) - bessel_i(nu + 1, x)
            rhs = 2 * nu / x * bessel_i(nu, x)
            assert lhs == pytest.approx(rhs, rel=1e-8)


def test_bessel_regimes_agree_at_switch():
    for nu in (0.0, 0.5, 1.0, 2.0, 3.0):
        x = max(BESSEL_SWITCH, 2 * nu * nu)
        a = _log_bessel_series(nu, x)[0]
        b = _log_bessel_asymptotic(nu, x)[0]
        assert abs(math.exp(a - b) - 1) < 1e-8


def test_log_bessel_large_argument():
    want = math.log(sps.ive(0, 2000.0)) + 2000.0
    assert log_bessel_i(0, 2000.0) == pytest.approx(want, rel=1e-13)
    with pytest.raises(OverflowError):
        bessel_i(0, 2000.0)


@pytest.mark.parametrize("nu, x", [(0, -1.0), (-1.5, 1.0)])
def test_bessel_domain(nu, x):
    with pytest.raises(DomainError):
        bessel_i(nu, x)


def test_bessel_error_bound():
    r = bessel_i(1.5, 3.0, full_output=True)
    assert 0 <= r.abs_error_bound < 1e-12 * r.value
