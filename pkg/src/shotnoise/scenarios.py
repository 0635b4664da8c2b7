"""Named verification scenarios, one per worked example.

Each scenario runs a self-contained check and returns a
:class:`ScenarioResult` with the measured statistic and its threshold.  The
``verify`` command of the CLI exposes this registry.
"""

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy import integrate

from . import diagnostics as dg
from .distributions import (Bessel, Burr, Degenerate, Exponential, Gamma, GeneralizedLinnik,
                            HalfCauchy, LogCauchy, LogPareto, PositiveLinnik, PositiveStable,
                            Weibull)
from .engine import (ConvergenceStatus, ExponentialResponse, IndicatorResponse, PowerResponse,
                     ShotNoiseModel, existence_check, sample_stationary)
from .transforms import (bdlp_from_sd, gamma_jump_transform, invert_lt, jump_lt_from_sn,
                         law_transform, sd_from_bdlp, sn_lt_from_jumps, subordinate)


@dataclass(frozen=True)
class ScenarioResult:
    name: str
    passed: bool
    statistic: float
    threshold: float
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "statistic": self.statistic,
                "threshold": self.threshold, "details": self.details}


@dataclass(frozen=True)
class Scenario:
    name: str
    anchor: str
    run: Callable  # (rng, n) -> ScenarioResult


REGISTRY = {}


def _register(name, anchor):
    def deco(fn):
        REGISTRY[name] = Scenario(name, anchor, fn)
        return fn
    return deco


def _max_gap(f, g, grid):
    return float(np.max(np.abs(np.asarray(f(grid)) - np.asarray(g(grid)))))


LOG_GRID = np.logspace(-2, 2, 40)


@_register("gamma-sn", "gamma law: stationary shot noise with exponential jumps, rho = lambda/omega")
def _gamma_sn(rng, n):
    n = n or 100_000
    x = sample_stationary(ShotNoiseModel(2.0, Exponential(1.0)), n, 1e-4, rng)
    d, band = dg.ks_distance(x, Gamma(2.0, 1.0).cdf), dg.ks_band(n)
    return ScenarioResult("gamma-sn", d < band, d, band, {"n": n})


@_register("linnik-self", "positive Linnik law is generated by itself (jump identification)")
def _linnik_self(rng, n):
    law = PositiveLinnik(0.5, 1.0)
    grid = np.logspace(-2, 2, 20)
    err = _max_gap(jump_lt_from_sn(law_transform(law), 0.5), law.lt, grid)
    return ScenarioResult("linnik-self", err < 1e-6, err, 1e-6)


@_register("generalized-linnik", "generalized Linnik law as shot noise with Linnik jumps")
def _gen_linnik(rng, n):
    rho, rho1, beta = 1.5, 0.7, 1.0
    phi = sn_lt_from_jumps(PositiveLinnik(rho1, beta), rho)
    err = _max_gap(phi, GeneralizedLinnik(rho, rho1, beta).lt, LOG_GRID)
    return ScenarioResult("generalized-linnik", err < 1e-6, err, 1e-6)


@_register("bdlp-roundtrip", "SD law <-> background driving transform, gamma and Linnik")
def _bdlp_roundtrip(rng, n):
    err = 0.0
    for law in (Gamma(1.5, 2.0), PositiveLinnik(0.6, 1.5)):
        phi = law_transform(law)
        back = sd_from_bdlp(bdlp_from_sd(phi))
        err = max(err, _max_gap(back, phi, LOG_GRID))
    return ScenarioResult("bdlp-roundtrip", err < 1e-6, err, 1e-6)


@_register("bessel-inversion", "Bessel law as gamma-jump shot noise: product transform form")
def _bessel(rng, n):
    law = Bessel(1.0)
    xs = np.linspace(0.1, 10, 20)
    inv = invert_lt(gamma_jump_transform(1.0, 2), xs)
    quad = np.array([integrate.quad(law.pdf, 0, x, limit=200)[0] for x in xs])
    err = float(np.max(np.abs(inv - quad)))
    return ScenarioResult("bessel-inversion", err < 1e-4, err, 1e-4)


@_register("bessel-jumps", "Bessel law: generating jumps have CDF 1 - exp(-x)(1 + x)")
def _bessel_jumps(rng, n):
    g = jump_lt_from_sn(law_transform(Bessel(1.0)), 1.0)
    err = _max_gap(g, Gamma(2.0, 1.0).lt, LOG_GRID)
    return ScenarioResult("bessel-jumps", err < 1e-6, err, 1e-6)


def _classify_scenario(name, law, rho):
    rep = dg.classify(law)
    ok = rep.verdict is dg.Verdict.SHOT_NOISE and rep.ci[0] <= rho <= rep.ci[1]
    return ScenarioResult(name, ok, rep.index, rho, {"verdict": rep.verdict.value,
                                                      "ci": list(rep.ci)})


@_register("burr-sn", "Burr law is shot noise with index rho")
def _burr(rng, n):
    return _classify_scenario("burr-sn", Burr(0.7, 1.0, 2.0), 0.7)


@_register("weibull-sn", "Weibull law with shape at most one is shot noise")
def _weibull(rng, n):
    return _classify_scenario("weibull-sn", Weibull(0.5, 1.0), 0.5)


@_register("halfcauchy-sn", "half-Cauchy law is shot noise with index one")
def _halfcauchy(rng, n):
    return _classify_scenario("halfcauchy-sn", HalfCauchy(), 1.0)


@_register("linnik-tail-ratio", "Linnik upper/lower tail ratio limit beta^2 Gamma(1+rho)/Gamma(1-rho)")
def _tail_ratio(rng, n):
    worst = 0.0
    for beta in (1.0, 2.0):
        limit = dg.linnik_tail_limit(0.5, beta)
        worst = max(worst, abs(dg.linnik_tail_ratio(0.5, beta, 1e4) / limit - 1))
    return ScenarioResult("linnik-tail-ratio", worst < 0.1, worst, 0.1)


@_register("logcauchy-not-sd", "log-Cauchy law: slowly varying at zero, hence not SD")
def _logcauchy(rng, n):
    rep = dg.classify(LogCauchy())
    ok = rep.verdict is dg.Verdict.NOT_SD_SLOW_VARIATION
    return ScenarioResult("logcauchy-not-sd", ok, rep.index, dg.POSITIVITY_THRESHOLD,
                          {"verdict": rep.verdict.value})


@_register("subordination-not-sd", "gamma subordinated by gamma: slowly varying, not SD")
def _subordination(rng, n):
    phi = subordinate(Exponential(1.0), Exponential(1.0))
    li = float(phi.local_index(1e6))
    rep = dg.classify(phi)
    ok = li < 0.1 and rep.verdict is dg.Verdict.NOT_SD_SLOW_VARIATION
    return ScenarioResult("subordination-not-sd", ok, li, 0.1, {"verdict": rep.verdict.value})


@_register("stable-ratio", "ratio of two 1/2-stable variables has density 1/(pi sqrt(x)(1+x))")
def _stable_ratio(rng, n):
    n = n or 100_000
    s = PositiveStable(0.5)
    r = s.rvs(rng, n) / s.rvs(rng, n)
    d = dg.ks_distance(r, lambda x: 2 / np.pi * np.arctan(np.sqrt(x)))
    band = dg.ks_band(n)
    return ScenarioResult("stable-ratio", d < band, d, band, {"n": n})


@_register("existence", "existence of sum xi_k h(tau_k): exponential, power and indicator responses")
def _existence(rng, n):
    cases = [
        (Gamma(2.0, 1.0), ExponentialResponse(1.0), ConvergenceStatus.CONVERGES),
        (LogPareto(), ExponentialResponse(1.0), ConvergenceStatus.DIVERGES),
        (Burr(0.5, 1.0, 1.0), PowerResponse(2.0), ConvergenceStatus.DIVERGES),
        (Exponential(1.0), PowerResponse(2.0), ConvergenceStatus.CONVERGES),
        (LogPareto(), IndicatorResponse(0.0, 1.0), ConvergenceStatus.CONVERGES),
    ]
    got = [existence_check(ShotNoiseModel(1.0, law, h)).status for law, h, _ in cases]
    wrong = sum(g is not want for g, (_, _, want) in zip(got, cases))
    return ScenarioResult("existence", wrong == 0, float(wrong), 0.0,
                          {"verdicts": [g.value for g in got]})


@_register("fixed-point", "R^(omega/lambda) (X + xi) has the law of X, R uniform")
def _fixed_point(rng, n):
    n = n or 100_000
    worst, band = 0.0, dg.ks_band(n, n)
    for rho in (0.5, 1.0, 2.0):
        model = ShotNoiseModel(rho, Exponential(1.0))
        x = sample_stationary(model, n, 1e-4, rng)
        y = sample_stationary(model, n, 1e-4, rng)
        z = rng.random(n) ** (1 / rho) * (y + Exponential(1.0).rvs(rng, n))
        worst = max(worst, dg.ks_two_sample(x, z))
    return ScenarioResult("fixed-point", worst < band, worst, band, {"n": n})


@_register("mode-at-zero", "stationary density with rho <= 1 is nonincreasing (mode at zero)")
def _mode(rng, n):
    n = n or 100_000
    x = sample_stationary(ShotNoiseModel(0.5, Exponential(1.0)), n, 1e-4, rng)
    excess = histogram_monotone_excess(x)
    return ScenarioResult("mode-at-zero", excess <= 0, excess, 0.0, {"n": n})


@_register("index-recovery", "regular variation at zero with index lambda/omega")
def _index(rng, n):
    n = n or 100_000
    worst = 0.0
    for rho in (0.5, 1.0, 2.0):
        x = sample_stationary(ShotNoiseModel(rho, Exponential(1.0)), n, 1e-4, rng)
        est = dg.rv_index_at_zero(x, rng=rng).estimate
        worst = max(worst, abs(est / rho - 1))
    return ScenarioResult("index-recovery", worst <= 0.15, worst, 0.15, {"n": n})


@_register("degenerate-zero", "zero jumps give the zero process")
def _degenerate(rng, n):
    n = n or 1000
    x = sample_stationary(ShotNoiseModel(1.0, Degenerate(0.0)), n, 1e-4, rng)
    m = float(np.max(np.abs(x)))
    return ScenarioResult("degenerate-zero", m == 0.0, m, 0.0)


def histogram_monotone_excess(x, bins=50):
    """Largest violation of count_{k+1} <= count_k + 3 sqrt(count_k) over 50
    equal bins on [0, q_0.99]; <= 0 means nonincreasing up to noise."""
    hi = float(np.quantile(x, 0.99))
    counts, _ = np.histogram(x, bins=bins, range=(0.0, hi))
    counts = counts.astype(float)
    return float(np.max(counts[1:] - counts[:-1] - 3 * np.sqrt(counts[:-1])))


def run_scenario(name, rng, n=None):
    try:
        sc = REGISTRY[name]
    except KeyError as exc:
        raise KeyError(f"unknown scenario {name!r}; see `verify --list`") from exc
    return sc.run(rng, n)
