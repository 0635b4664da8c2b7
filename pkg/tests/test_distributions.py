import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate, special as sps

from shotnoise import diagnostics as dg
from shotnoise.distributions import (KINDS, Bessel, Burr, Degenerate, Exponential, Gamma,
                                     GeneralizedLinnik, HalfCauchy, LogCauchy, LogPareto,
                                     PositiveLinnik, PositiveStable, Weibull, cdf, law_from_dict,
                                     lt, pdf, sample)
from shotnoise.errors import InvalidParameterError, UnsupportedOperationError

from oracle_values import BESSEL1_CDF, BESSEL1_PDF_1, GAMMA21_CDF_1, LINNIK_HALF_CDF

ALL_LAWS = [
    Exponential(2.0), Gamma(2.0, 1.0), Gamma(0.5, 3.0), PositiveStable(0.5), PositiveStable(0.8),
    PositiveLinnik(0.5, 1.0), PositiveLinnik(0.8, 2.0), GeneralizedLinnik(1.5, 0.7, 1.0),
    Bessel(1.0), Bessel(2.5), Burr(0.7, 1.0, 2.0), Weibull(0.5, 1.0), HalfCauchy(), LogCauchy(),
    Degenerate(1.5), LogPareto(),
]
DENSITY_LAWS = [law for law in ALL_LAWS if law.has_density]
LT_LAWS = [law for law in ALL_LAWS if law.has_lt]


# -- worked examples ------------------------------------------------------------

def test_linnik_lt_example():
    assert lt(PositiveLinnik(0.5, 1.0), 4.0) == pytest.approx(1 / 3, rel=1e-14)


def test_gamma_lt_example():
    assert lt(Gamma(2.0, 1.0), 1.0) == pytest.approx(0.25, rel=1e-14)


@pytest.mark.parametrize("law", LT_LAWS, ids=repr)
def test_lt_at_zero_is_one(law):
    assert lt(law, 0.0) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("beta", [0.5, 1.0, 3.0])
def test_linnik_rho_one_is_exponential(beta):
    x = np.linspace(0.01, 10, 50)
    assert np.allclose(cdf(PositiveLinnik(1.0, beta), x), 1 - np.exp(-x / beta), atol=1e-12)


def test_halfcauchy_examples():
    assert cdf(HalfCauchy(), 1.0) == pytest.approx(0.5, rel=1e-14)
    assert pdf(HalfCauchy(), 0.0) == pytest.approx(2 / math.pi, rel=1e-14)


def test_burr_example():
    assert cdf(Burr(1.0, 1.0, 2.0), 1.0) == pytest.approx(0.75, rel=1e-14)


def test_gamma_one_is_exponential():
    x = np.linspace(0, 8, 33)
    assert np.allclose(cdf(Gamma(1.0, 1.0), x), 1 - np.exp(-x), atol=1e-15)
    assert cdf(Gamma(2.0, 1.0), 1.0) == pytest.approx(GAMMA21_CDF_1, abs=1e-14)


def test_bessel_pdf_example():
    assert pdf(Bessel(1.0), 1.0) == pytest.approx(BESSEL1_PDF_1, rel=1e-12)


def test_bessel_cdf_oracle():
    xs = np.array(sorted(BESSEL1_CDF))
    want = np.array([BESSEL1_CDF[x] for x in xs])
    assert np.max(np.abs(cdf(Bessel(1.0), xs) - want)) < 1e-8


def test_linnik_cdf_series_oracle():
    xs = np.array(sorted(LINNIK_HALF_CDF))
    want = np.array([LINNIK_HALF_CDF[x] for x in xs])
    # the 30-term oracle itself is truncated at about 3e-8 for x = 2
    assert np.max(np.abs(cdf(PositiveLinnik(0.5, 1.0), xs) - want)) < 1e-6


def test_degenerate_sampler(rng):
    assert np.all(sample(Degenerate(2.5), rng, 100) == 2.5)
    assert cdf(Degenerate(2.5), 2.4) == 0.0 and cdf(Degenerate(2.5), 2.5) == 1.0


def test_positive_stable_half_levy_cdf():
    x = np.geomspace(1e-3, 1e3, 40)
    want = sps.erfc(1 / (2 * np.sqrt(x)))
    assert np.max(np.abs(cdf(PositiveStable(0.5), x) - want)) < 1e-8


# -- CDF, density and quantile consistency ------------------------------------------

@pytest.mark.parametrize("law", DENSITY_LAWS, ids=repr)
def test_density_integrates_to_cdf(law):
    if isinstance(law, LogCauchy):
        # the density is not representable near 0; integrate the increment from
        # a small quantile in u = log x, where the integrand is the Cauchy density
        lo = float(law.quantile(1e-3))

        def integral(x):
            v = integrate.quad(lambda u: law.pdf(math.exp(u)) * math.exp(u), math.log(lo),
                               math.log(x), epsabs=1e-12)[0]
            return v + float(law.cdf(lo))
    else:
        def integral(x):
            return integrate.quad(law.pdf, 0, x, limit=400, epsabs=1e-12)[0]
    for q in (0.1, 0.5, 0.9):
        x = float(law.quantile(q))
        assert integral(x) == pytest.approx(float(law.cdf(x)), abs=1e-6)


@pytest.mark.parametrize("law", ALL_LAWS, ids=repr)
def test_quantile_inverts_cdf(law):
    if isinstance(law, Degenerate):
        return
    for q in (0.05, 0.3, 0.5, 0.8, 0.97):
        assert float(law.cdf(law.quantile(q))) == pytest.approx(q, abs=1e-7)


@pytest.mark.parametrize("law", [l for l in ALL_LAWS if not isinstance(l, Degenerate)], ids=repr)
def test_cdf_monotone_with_limits(law):
    x = np.geomspace(1e-6, 1e6, 200)
    f = np.asarray(law.cdf(x), dtype=float)
    assert np.all(np.diff(f) >= -1e-12)
    assert np.all((f >= 0) & (f <= 1))
    assert f[0] < 0.2 and f[-1] > 0.8


@pytest.mark.parametrize("law", [l for l in ALL_LAWS if not isinstance(l, Degenerate)], ids=repr)
def test_sampler_matches_cdf(law, rng):
    n = 5_000 if isinstance(law, GeneralizedLinnik) else 100_000
    x = sample(law, rng, n)
    assert np.all(x >= 0)
    assert dg.ks_distance(x, law.cdf) < dg.ks_band(n)


@pytest.mark.parametrize("law", LT_LAWS, ids=repr)
def test_lt_matches_monte_carlo(law, rng):
    n = 5_000 if isinstance(law, GeneralizedLinnik) else 100_000
    x = sample(law, rng, n)
    for s in (0.3, 1.0, 4.0):
        e = np.exp(-s * x)
        se = max(e.std(ddof=1) / math.sqrt(n), 1e-12)
        assert abs(e.mean() - lt(law, s)) < 4 * se + 1e-12


def test_stable_ratio_identity(rng):
    n = 100_000
    s = PositiveStable(0.5)
    r = s.rvs(rng, n) / s.rvs(rng, n)
    assert dg.ks_distance(r, lambda v: 2 / np.pi * np.arctan(np.sqrt(v))) < dg.ks_band(n)


def test_generalized_linnik_reduces_to_linnik():
    x = np.array([0.1, 0.5, 1.0, 3.0])
    a = cdf(GeneralizedLinnik(0.6, 0.6, 1.0), x)
    b = cdf(PositiveLinnik(0.6, 1.0), x)
    assert np.max(np.abs(a - b)) < 1e-6


# -- serialization and errors ---------------------------------------------------------

@pytest.mark.parametrize("law", ALL_LAWS, ids=repr)
def test_dict_round_trip(law):
    assert law_from_dict(law.to_dict()) == law


def test_every_kind_registered():
    assert set(KINDS) == {type(l).kind for l in ALL_LAWS}


@pytest.mark.parametrize("data", [
    {"kind": "Nope"}, {"params": {}}, {"kind": "Gamma", "params": {"shape": 2}},
    {"kind": "Gamma", "params": {"rho": -1}}, {"kind": "PositiveStable", "params": {"rho": 1.5}},
    {"kind": "Burr", "params": {"rho": 1.5, "beta2": 1.0}}, {"kind": "Weibull", "params": {"rho": 1.5}},
])
def test_bad_law_specs(data):
    with pytest.raises(InvalidParameterError):
        law_from_dict(data)


def test_missing_operations():
    with pytest.raises(UnsupportedOperationError):
        lt(LogCauchy(), 1.0)
    with pytest.raises(UnsupportedOperationError):
        pdf(Degenerate(1.0), 1.0)
    with pytest.raises(InvalidParameterError):
        lt(Gamma(1.0, 1.0), -1.0)


# -- properties -----------------------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(st.floats(0.05, 0.99), st.floats(0.1, 10.0), st.floats(1e-3, 50.0))
def test_linnik_lt_closed_form(rho, beta, s):
    assert lt(PositiveLinnik(rho, beta), s) == pytest.approx(1 / (1 + beta * s ** rho), rel=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.05, 0.99), st.floats(0.1, 10.0), st.floats(1e-3, 1e3), st.floats(1.0, 10.0))
def test_linnik_cdf_monotone(rho, beta, x, k):
    law = PositiveLinnik(rho, beta)
    assert law.cdf(x * k) >= law.cdf(x) - 1e-12


@settings(max_examples=40, deadline=None)
@given(st.floats(0.1, 5.0), st.floats(0.1, 5.0), st.floats(0.0, 20.0))
def test_gamma_lt_positive_and_decreasing(rho, beta, s):
    law = Gamma(rho, beta)
    assert 0 < lt(law, s + 0.5) <= lt(law, s) <= 1
