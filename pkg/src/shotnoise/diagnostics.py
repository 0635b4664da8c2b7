"""Regular-variation diagnostics at zero and the resulting classification.

A positive shot-noise law with rate ratio rho has F(x) ~ x^rho L(x) at 0 with
L slowly varying, equivalently -s Phi'(s)/Phi(s) -> rho as s -> inf.  A
selfdecomposable law whose CDF is slowly varying at 0 (index 0) cannot
exist, so slow variation certifies "not selfdecomposable"; an infinite index
(rapid variation) is what an SD law with infinite k(0+) looks like.
"""

import json
import math
import warnings
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np
from scipy import stats

from .distributions import NamedLaw, PositiveLinnik
from .errors import (InsufficientDataError, InvalidParameterError, MonotonicityWarning,
                     NumericalError, SmallSampleWarning)
from .special import gamma_fn
from .transforms import LaplaceTransform, bdlp_positivity_excess

POSITIVITY_THRESHOLD = 0.1
RATIO_BAND_2 = (0.9, 1.1)
RATIO_BAND_10 = (0.8, 1.25)
STABILITY = 0.05  # relative spread allowed across three nested windows
RAPID_INDEX = 10.0
MIN_WINDOW_COUNT = 100
MIN_POINT_COUNT = 20
MAX_OCTAVES = 60
CI_FLOOR = 0.01
LT_GRID = 10.0 ** np.arange(2, 7)


class Verdict(str, Enum):
    SHOT_NOISE = "ShotNoise"
    SD_NOT_SN = "SelfDecomposableNotSN"
    NOT_SD_SLOW_VARIATION = "NotSD_SlowVariation"
    INCONCLUSIVE = "Inconclusive"


class Method(str, Enum):
    FROM_SAMPLES = "FromSamples"
    FROM_CDF = "FromCDF"
    FROM_LT = "FromLT"


@dataclass(frozen=True)
class Evidence:
    check: str
    value: float
    threshold: str

    def to_dict(self):
        return {"check": self.check, "value": _num(self.value), "threshold": self.threshold}


@dataclass(frozen=True)
class IndexEstimate:
    """Index of regular variation at zero with a confidence interval.

    ``rapid`` marks an index that grows without bound (estimate = inf).
    ``log_corrected`` / ``log_corrected_ci`` hold the estimate from a fit that
    also absorbs a slowly varying factor |log x|^(-gamma); it is the relevant
    number once slow variation has been detected.
    """

    estimate: float
    ci: tuple
    method: Method
    rapid: bool = False
    log_corrected: Optional[float] = None
    log_corrected_ci: Optional[tuple] = None
    details: dict = field(default_factory=dict, compare=False)

    @property
    def half_width(self):
        return 0.5 * (self.ci[1] - self.ci[0])


@dataclass(frozen=True)
class DiagnosisReport:
    verdict: Verdict
    index: float
    ci: tuple
    method: Method
    evidence: list

    def to_dict(self):
        return {
            "verdict": self.verdict.value,
            "index": _num(self.index),
            "ci": [_num(self.ci[0]), _num(self.ci[1])],
            "method": self.method.value,
            "evidence": [e.to_dict() for e in self.evidence],
        }

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)


def _num(v):
    v = float(v)
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return v


# --------------------------------------------------------------------------
# Index from a CDF or from samples
# --------------------------------------------------------------------------


def _wls(X, y, w):
    """Weighted least squares; returns coefficients and their covariance."""
    sw = np.sqrt(w)
    A = X * sw[:, None]
    b = y * sw
    coef, *_ = np.linalg.lstsq(A, b, rcond=None)
    dof = max(X.shape[0] - X.shape[1], 1)
    resid = b - A @ coef
    sigma2 = float(resid @ resid) / dof
    cov = sigma2 * np.linalg.pinv(A.T @ A)
    return coef, cov


def _design(x, x_max, scale, log_corrected=False):
    cols = [np.ones_like(x), np.log(x), x / x_max]
    if log_corrected:
        cols.append(np.log(-np.log(x / scale)))
    return np.column_stack(cols)


def _window_fit(x, y, w, x_max, scale, log_corrected=False):
    X = _design(x, x_max, scale, log_corrected)
    coef, cov = _wls(X, y, w)
    return coef[1], math.sqrt(max(cov[1, 1], 0.0))


def _scan(x, y, w, x_max, scale):
    """Nested windows [x_J, x_k] for k = 0, 1, ...; the first k whose slope
    agrees with the next two within STABILITY is accepted."""
    n_pts = x.size
    slopes = []
    for k in range(0, n_pts - 3):
        slopes.append(_window_fit(x[k:], y[k:], w[k:], x_max, scale)[0])
    slopes = np.asarray(slopes)
    for k in range(len(slopes) - 2):
        trio = slopes[k:k + 3]
        if np.ptp(trio) <= STABILITY * abs(trio.mean()):
            return k, slopes, True
    return 0, slopes, False


def _local_slopes(x, y):
    return np.diff(y) / np.diff(np.log(x))


def _is_rapid(local):
    """Local slopes (ordered towards 0) beyond RAPID_INDEX and still growing."""
    return local.size >= 2 and local[-1] > RAPID_INDEX and local[-1] > local[-2]


def rv_index_at_zero(data, scale=None, rng=None, n_boot=200):
    """Index rho of regular variation at 0 of a CDF, F(x) ~ x^rho L(x).

    ``data`` is a catalog law, a callable CDF or a 1-d sample.  The CDF is
    read on the dyadic grid x_j = x_max 2^-j (x_max = 0.1 * median for
    analytic input, the 10th percentile for samples) and log F is regressed
    on log x plus a first-order correction x / x_max over nested windows
    reaching down to the smallest grid point; the first window whose slope
    is stable over three nestings is kept.  Confidence intervals come from
    the regression residuals (analytic) or a multinomial bootstrap (samples).
    """
    if isinstance(data, NamedLaw) or callable(data):
        return _index_from_cdf(data, scale)
    return _index_from_samples(np.asarray(data, dtype=float), rng, n_boot)


def _index_from_cdf(data, scale):
    if isinstance(data, NamedLaw):
        cdf = data.cdf
        scale = data.median() if scale is None else scale
    else:
        cdf = data
        scale = 1.0 if scale is None else scale
    if not scale > 0:
        raise InsufficientDataError("the law has no mass on (0, inf)")
    x_max = 0.1 * scale
    xs = x_max * 2.0 ** -np.arange(MAX_OCTAVES + 1)
    F = np.asarray(cdf(xs), dtype=float)
    keep = F > 1e-280
    # stop at the first point where F vanishes
    last = np.argmin(keep) if not keep.all() else keep.size
    xs, F = xs[:last], F[:last]
    details = {"x_max": x_max, "points": int(xs.size)}
    if xs.size < 2:
        # F is (numerically) zero just below x_max: rapid variation
        return IndexEstimate(math.inf, (RAPID_INDEX, math.inf), Method.FROM_CDF, True,
                             details=details)
    y = np.log(F)
    local = _local_slopes(xs, y)
    if _is_rapid(local) or (xs.size < 5 and local[-1] > RAPID_INDEX):
        details["local_slopes"] = local.tolist()
        return IndexEstimate(math.inf, (float(local[-1]), math.inf), Method.FROM_CDF, True,
                             details=details)
    if xs.size < 5:
        raise InsufficientDataError("too few grid points with F > 0 for an index estimate")
    w = np.ones_like(xs)
    k, slopes, stable = _scan(xs, y, w, x_max, scale)
    est, se = _window_fit(xs[k:], y[k:], w[k:], x_max, scale)
    half = max(1.96 * se, CI_FLOOR)
    lc, lc_se = _window_fit(xs[k:], y[k:], w[k:], x_max, scale, log_corrected=True)
    lc_half = max(1.96 * lc_se, CI_FLOOR)
    details.update(window_start=int(k), stable=stable, window_slopes=slopes.tolist(),
                   local_slopes=local.tolist(), xs=xs, F=F)
    return IndexEstimate(float(est), (est - half, est + half), Method.FROM_CDF, False,
                         float(lc), (lc - lc_half, lc + lc_half), details)


def _index_from_samples(x, rng, n_boot):
    if x.ndim != 1:
        raise InvalidParameterError("samples must be one-dimensional")
    if np.any(x < 0) or not np.all(np.isfinite(x)):
        raise InvalidParameterError("samples must be nonnegative and finite")
    n = x.size
    if n < 10_000:
        warnings.warn(f"n = {n} < 10^4 samples: the index estimate may be unreliable",
                      SmallSampleWarning, stacklevel=3)
    xs_sorted = np.sort(x)
    x_max = float(np.quantile(xs_sorted, 0.1))
    scale = float(np.median(xs_sorted))
    if not x_max > 0:
        raise InsufficientDataError("the 10th percentile is zero: no small-x window")
    grid = x_max * 2.0 ** -np.arange(MAX_OCTAVES + 1)
    counts = np.searchsorted(xs_sorted, grid, side="right")
    if counts[0] < MIN_WINDOW_COUNT:
        raise InsufficientDataError(
            f"only {counts[0]} points in the scan window, need {MIN_WINDOW_COUNT}")
    J = int(np.sum(counts >= MIN_POINT_COUNT))
    if J < 4:
        raise InsufficientDataError("the small-x window spans fewer than four octaves of data")
    xs, k_cnt = grid[:J], counts[:J].astype(float)
    y = np.log(k_cnt / n)
    w = k_cnt  # var log F_n ~ 1 / count
    k, slopes, stable = _scan(xs, y, w, x_max, scale)
    est, _ = _window_fit(xs[k:], y[k:], w[k:], x_max, scale)
    lc, _ = _window_fit(xs[k:], y[k:], w[k:], x_max, scale, log_corrected=True)

    # Bootstrap: resampling the data is a multinomial draw of the bin counts
    # between consecutive grid points (plus the mass above x_max).
    rng = np.random.default_rng(0) if rng is None else rng
    # bins[0]: x <= x_{J-1}; bins[i]: x_{J-i} < x <= x_{J-1-i}
    bins = np.concatenate([[counts[J - 1]], (counts[:J - 1] - counts[1:J])[::-1], [n - counts[0]]])
    probs = bins / n
    draws = rng.multinomial(n, probs, size=n_boot)
    boot_est, boot_lc = [], []
    sub = slice(k, None)
    for d in draws:
        cum = np.cumsum(d[:-1])[::-1]  # counts at xs[0], ..., xs[J-1]
        if np.any(cum <= 0):
            continue
        yb = np.log(cum / n)
        boot_est.append(_window_fit(xs[sub], yb[sub], cum[sub], x_max, scale)[0])
        boot_lc.append(_window_fit(xs[sub], yb[sub], cum[sub], x_max, scale, True)[0])
    if len(boot_est) < 0.9 * n_boot:
        raise NumericalError("bootstrap failed: too many resamples with empty windows")
    lo, hi = np.quantile(boot_est, [0.025, 0.975])
    ci = (min(lo, est - CI_FLOOR), max(hi, est + CI_FLOOR))
    llo, lhi = np.quantile(boot_lc, [0.025, 0.975])
    lc_ci = (min(llo, lc - CI_FLOOR), max(lhi, lc + CI_FLOOR))
    local = _local_slopes(xs, y)
    details = {"x_max": x_max, "points": J, "window_start": int(k), "stable": stable,
               "window_slopes": slopes.tolist(), "local_slopes": local.tolist(),
               "xs": xs, "F": k_cnt / n, "sorted": xs_sorted}
    rapid = _is_rapid(local)
    if rapid:
        return IndexEstimate(math.inf, (float(local[-1]), math.inf), Method.FROM_SAMPLES, True,
                             details=details)
    return IndexEstimate(float(est), (float(ci[0]), float(ci[1])), Method.FROM_SAMPLES, False,
                         float(lc), (float(lc_ci[0]), float(lc_ci[1])), details)


# --------------------------------------------------------------------------
# Index from a Laplace transform
# --------------------------------------------------------------------------


def rv_index_from_lt(phi, s_values=LT_GRID):
    """lim_{s -> inf} -s Phi'(s)/Phi(s) from its values at s = 10^2 ... 10^6.

    Sequences that have settled are reported as is; geometric approach is
    accelerated with Aitken's delta-squared; anything slower (as for slowly
    varying transforms, where the local index decays like 1/log s) is
    extrapolated by a quadratic fit in 1/log s.  An index above 10 that is
    still growing is reported as infinite (rapid variation).
    """
    if isinstance(phi, NamedLaw):
        from .transforms import law_transform
        phi = law_transform(phi)
    s = np.asarray(s_values, dtype=float)
    v = np.asarray(phi.local_index(s), dtype=float)
    if not np.all(np.isfinite(v)):
        raise NumericalError("local index is not finite on the evaluation grid")
    details = {"s": s.tolist(), "local_index": v.tolist()}
    d = np.diff(v)
    if v[-1] > RAPID_INDEX and d[-1] > 0:
        return IndexEstimate(math.inf, (float(v[-1]), math.inf), Method.FROM_LT, True,
                             details=details)
    big = np.abs(d) > 1e-6
    if np.any(np.diff(np.sign(d[big])) != 0):
        warnings.warn("local index oscillates across the evaluation grid", MonotonicityWarning,
                      stacklevel=2)
    u = 1.0 / np.log(s)
    X = np.column_stack([np.ones_like(u), u, u * u])
    fit = float(np.linalg.lstsq(X, v, rcond=None)[0][0])
    den = v[-1] - 2 * v[-2] + v[-3]
    aitken = float(v[-1] - d[-1] ** 2 / den) if abs(den) > 1e-14 else float(v[-1])
    if abs(d[-1]) < 1e-5:
        est, alt = float(v[-1]), aitken
        details["rule"] = "settled"
    elif 0 < d[-1] / d[-2] < 0.5:
        est, alt = aitken, fit
        details["rule"] = "aitken"
    else:
        est, alt = fit, aitken
        details["rule"] = "fit in 1/log s"
    details.update(fit=fit, aitken=aitken)
    ci = (min(est, alt) - CI_FLOOR, max(est, alt) + CI_FLOOR)
    return IndexEstimate(est, ci, Method.FROM_LT, False, est, ci, details)


# --------------------------------------------------------------------------
# Slow-variation ratio test and classification
# --------------------------------------------------------------------------


def _ratio_evidence(pairs):
    """pairs: (label, ratio, band).  Returns evidence and whether all pass."""
    ev, ok = [], True
    for label, r, band in pairs:
        ev.append(Evidence(label, float(r), f"[{band[0]}, {band[1]}]"))
        ok &= bool(band[0] <= r <= band[1])
    return ev, ok


def _ratios_from_cdf(cdf, xs):
    pairs = []
    for x in xs:
        F = float(cdf(x))
        pairs.append((f"F(2x)/F(x) at x={x:.4g}", float(cdf(2 * x)) / F, RATIO_BAND_2))
        pairs.append((f"F(10x)/F(x) at x={x:.4g}", float(cdf(10 * x)) / F, RATIO_BAND_10))
    return pairs


def _ratios_from_lt(phi, s_pts):
    pairs = []
    for s in s_pts:
        lp = float(phi.log(s))
        pairs.append((f"Phi(s/2)/Phi(s) at s={s:.4g}", math.exp(min(float(phi.log(s / 2)) - lp, 700.0)),
                      RATIO_BAND_2))
        pairs.append((f"Phi(s/10)/Phi(s) at s={s:.4g}", math.exp(min(float(phi.log(s / 10)) - lp, 700.0)),
                      RATIO_BAND_10))
    return pairs



def classify(data, rng=None):
    """Classify a catalog law, a Laplace transform or a sample.

    * finite positive index with CI excluding 0 -> ShotNoise
    * rapid variation -> SelfDecomposableNotSN when SD is known from the
      source (catalog metadata or an SD construction), else Inconclusive
    * slow variation confirmed by the ratio test, with the log-corrected
      index CI containing 0 and staying below 0.1 -> NotSD_SlowVariation
    * anything else -> Inconclusive
    """
    evidence = []
    sd_known = None
    if isinstance(data, LaplaceTransform):
        est = rv_index_from_lt(data)
        sd_known = data.sd_known
        pairs = _ratios_from_lt(data, [LT_GRID[-1], LT_GRID[-2]]) if not est.rapid else []
        try:
            excess = bdlp_positivity_excess(
                LaplaceTransform(lambda s: np.asarray(s) * data.dlog(s)))
            evidence.append(Evidence("max log Psi on [0.01, 100]", excess, "<= 0 if SD"))
        except (ArithmeticError, ValueError):
            pass
    elif isinstance(data, NamedLaw):
        est = rv_index_at_zero(data)
        sd_known = data.sd_known
        xs = est.details.get("xs", np.array([]))
        pairs = _ratios_from_cdf(data.cdf, xs[-2:][::-1]) if not est.rapid else []
    else:
        est = rv_index_at_zero(np.asarray(data, dtype=float), rng=rng)
        xs = est.details.get("xs", np.array([]))
        sorted_x = est.details["sorted"]
        n = sorted_x.size

        def ecdf(v):
            return np.searchsorted(sorted_x, v, side="right") / n

        pairs = _ratios_from_cdf(ecdf, xs[-2:][::-1]) if not est.rapid else []
    ratio_ev, slow = _ratio_evidence(pairs)
    evidence.extend(ratio_ev)
    evidence.append(Evidence("index estimate", est.estimate, f"> {POSITIVITY_THRESHOLD} for SN"))
    if est.log_corrected is not None:
        evidence.append(Evidence("log-corrected index", est.log_corrected,
                                 f"CI within (-inf, {POSITIVITY_THRESHOLD}) and containing 0"))
    if "stable" in est.details:
        evidence.append(Evidence("window stable", float(est.details["stable"]),
                                 f"slopes within {STABILITY:.0%}"))

    def report(verdict, index, ci):
        return DiagnosisReport(verdict, float(index), (float(ci[0]), float(ci[1])),
                               est.method, evidence)

    if est.rapid:
        verdict = Verdict.SD_NOT_SN if sd_known else Verdict.INCONCLUSIVE
        return report(verdict, est.estimate, est.ci)
    if slow and pairs:
        lo, hi = est.log_corrected_ci
        if lo <= 0 <= hi and hi < POSITIVITY_THRESHOLD:
            return report(Verdict.NOT_SD_SLOW_VARIATION, est.log_corrected, est.log_corrected_ci)
        return report(Verdict.INCONCLUSIVE, est.estimate, est.ci)
    if est.ci[0] > 0 and est.estimate >= POSITIVITY_THRESHOLD and sd_known is not False:
        return report(Verdict.SHOT_NOISE, est.estimate, est.ci)
    return report(Verdict.INCONCLUSIVE, est.estimate, est.ci)


# --------------------------------------------------------------------------
# Linnik tail ratio and goodness of fit
# --------------------------------------------------------------------------


def linnik_tail_limit(rho, beta):
    """beta^2 Gamma(1 + rho) / Gamma(1 - rho)."""
    return beta ** 2 * gamma_fn(1 + rho) / gamma_fn(1 - rho)


def linnik_tail_ratio(rho, beta, x):
    """(1 - F(x)) / F(1/x) for the positive Linnik law; tends to
    :func:`linnik_tail_limit` as x -> inf."""
    if not 0 < rho < 1:
        raise InvalidParameterError(f"the tail ratio limit needs 0 < rho < 1, got {rho}")
    law = PositiveLinnik(rho, beta)
    num = float(law.sf(x))
    den = float(law.cdf(1.0 / x))
    if num <= 1e-300 or den <= 1e-300:
        raise NumericalError(f"tail ratio underflows at x={x:g} (sf={num:.3g}, F(1/x)={den:.3g})")
    return num / den


def ks_band(n, m=None, coef=1.63):
    """99% Kolmogorov-Smirnov band: 1.63/sqrt(n), or the two-sample version."""
    if m is None:
        return coef / math.sqrt(n)
    return coef * math.sqrt((n + m) / (n * m))


def ks_distance(samples, cdf):
    """One-sample Kolmogorov-Smirnov statistic sup |F_n - F|."""
    x = np.asarray(samples, dtype=float).ravel()
    if x.size == 0:
        raise InsufficientDataError("no samples")
    if x.size < 10:
        warnings.warn("fewer than 10 samples", SmallSampleWarning, stacklevel=2)
    return float(stats.kstest(x, cdf).statistic)


def ks_two_sample(a, b):
    """Two-sample Kolmogorov-Smirnov statistic."""
    return float(stats.ks_2samp(np.asarray(a, dtype=float), np.asarray(b, dtype=float)).statistic)

