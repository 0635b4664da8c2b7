"""Scalar special functions used by the law catalog and transform calculus.

Everything here is a pure function of its arguments.  Each public function
accepts ``full_output=True`` and then returns an :class:`EvalResult` carrying
an estimated absolute error bound alongside the value.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate
from scipy.special import gammaln

from .errors import DomainError, NumericalError

EPS = np.finfo(float).eps

# Largest x with Gamma(x) representable in double precision.
GAMMA_MAX_ARG = 171.6243769563027

# Series evaluation of E_rho(-x) is used while its cancellation error bound
# stays below this level; beyond it the integral representation takes over.
ML_SERIES_TOL = 1e-11

# Modified Bessel I: large-argument asymptotic regime starts here.
BESSEL_SWITCH = 25.0


@dataclass(frozen=True)
class EvalResult:
    value: float
    abs_error_bound: float

    def __post_init__(self):
        if not np.all(np.isfinite(self.abs_error_bound)) or np.any(
            np.asarray(self.abs_error_bound) < 0
        ):
            raise NumericalError("error bound must be finite and nonnegative")


def _out(value, err, full_output):
    if full_output:
        return EvalResult(value, err)
    return value


# --------------------------------------------------------------------------
# Gamma
# --------------------------------------------------------------------------


def gamma_fn(x, full_output=False):
    """Gamma function for positive real ``x``.

    Raises
    ------
    DomainError
        If ``x <= 0`` or is not a number.
    OverflowError
        If ``Gamma(x)`` exceeds the double range (``x > 171.62...``).
    """
    x = float(x)
    if not x > 0:
        raise DomainError(f"gamma_fn needs x > 0, got {x}")
    if x > GAMMA_MAX_ARG:
        raise OverflowError(f"Gamma({x}) overflows double precision")
    value = math.gamma(x)
    return _out(value, 8 * EPS * value, full_output)


# --------------------------------------------------------------------------
# Mittag-Leffler on the negative half-line
# --------------------------------------------------------------------------


def _check_rho(rho):
    rho = float(rho)
    if not 0 < rho <= 1:
        raise DomainError(f"Mittag-Leffler index must lie in (0, 1], got {rho}")
    return rho


def _series_length(rho, xmax, shift):
    # Walk past the largest term until terms are 1e-40 of it.
    logx = math.log(xmax)
    peak = -np.inf
    k = 0
    while True:
        lt = k * logx - gammaln(shift + rho * k)
        peak = max(peak, lt)
        if k > 2 and lt < peak - 92.0 and lt < (k - 1) * logx - gammaln(shift + rho * (k - 1)):
            return k + 1
        k += 1
        if k > 20000:
            raise NumericalError("Mittag-Leffler series did not settle")


def _ml_series(rho, x, shift=1.0, start=0):
    """sum_{k>=start} (-x)^k / Gamma(shift + rho k) for x >= 0, with the sum
    of absolute terms (used for the cancellation bound)."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    abs_sum = np.zeros_like(x)
    pos = x > 0
    if start == 0:
        g0 = 0.0 if shift <= 0 else math.exp(-gammaln(shift))
        out[:] = g0
        abs_sum[:] = abs(g0)
    if not np.any(pos):
        return out, abs_sum
    xp = x[pos]
    K = _series_length(rho, float(xp.max()), shift)
    k = np.arange(max(start, 1), K, dtype=float)
    logterm = np.log(xp)[:, None] * k[None, :] - gammaln(shift + rho * k)[None, :]
    mag = np.exp(logterm)
    sign = np.where(k % 2 == 0, 1.0, -1.0)
    out[pos] += (mag * sign).sum(axis=1)
    abs_sum[pos] += mag.sum(axis=1)
    return out, abs_sum


def _ml_integral(rho, t, power=0):
    """sin(rho pi)/(rho pi) * int_0^inf u^(power/rho) exp(-t u^(1/rho))
    / (u^2 + 2u cos(rho pi) + 1) du, for t > 0 and 0 < rho < 1.

    With power=0 this equals E_rho(-t^rho).  The substitution u = w t^(-rho)
    puts every t on the same w-scale so one adaptive mesh serves them all.
    """
    t = np.atleast_1d(np.asarray(t, dtype=float))
    c = math.sin(rho * math.pi) / (rho * math.pi)
    cs = math.cos(rho * math.pi)
    a = t ** (-rho)
    wmax = 745.0 ** rho

    def integrand(w):
        u = w * a
        return w ** (power / rho) * math.exp(-(w ** (1.0 / rho))) / (u * u + 2 * u * cs + 1.0)

    val, err = integrate.quad_vec(
        integrand, 0.0, wmax, epsabs=1e-14, epsrel=1e-12, norm="max", limit=4000
    )
    scale = c * t ** (-rho - power)
    return scale * val, np.abs(scale) * err + 4 * EPS * np.abs(scale * val)


def _ml_neg(rho, x, shift=1.0):
    """Vectorised E_{rho,shift}(-x) for x >= 0 and shift in {1, rho}.
    Returns (value, error bound)."""
    x = np.asarray(x, dtype=float)
    if rho == 1.0:
        v = np.exp(-x)
        return v, 4 * EPS * v
    val = np.empty_like(x)
    err = np.empty_like(x)
    # Screen out points whose series could not possibly be well conditioned.
    maybe = x ** (1.0 / rho) < 40.0
    use_series = np.zeros_like(x, dtype=bool)
    if np.any(maybe):
        s, abs_sum = _ml_series(rho, x[maybe], shift=shift)
        bound = 4 * EPS * abs_sum * (1 + np.sqrt(_series_length(rho, max(float(x[maybe].max()), 1e-300), shift)))
        ok = bound <= ML_SERIES_TOL
        idx = np.flatnonzero(maybe)
        use_series[idx[ok]] = True
        val[idx[ok]] = s[ok]
        err[idx[ok]] = bound[ok]
    rest = ~use_series
    if np.any(rest):
        t = x[rest] ** (1.0 / rho)
        if shift == 1.0:
            v, e = _ml_integral(rho, t, power=0)
        else:
            # E_{rho,rho}(-t^rho) = t^(1-rho) * I(rho, t, power=1)
            v, e = _ml_integral(rho, t, power=1)
            v, e = v * t ** (1 - rho), e * t ** (1 - rho)
        val[rest] = v
        err[rest] = e
    return val, err


def _ml_neg_complement(rho, x):
    """1 - E_rho(-x) without the cancellation of forming 1 - E for small x."""
    x = np.asarray(x, dtype=float)
    if rho == 1.0:
        v = -np.expm1(-x)
        return v, 4 * EPS * v
    out = np.empty_like(x)
    err = np.empty_like(x)
    small = x <= 0.5
    if np.any(small):
        s, abs_sum = _ml_series(rho, x[small], start=1)
        out[small] = -s
        err[small] = 4 * EPS * abs_sum
    if np.any(~small):
        v, e = _ml_neg(rho, x[~small])
        out[~small] = 1.0 - v
        err[~small] = e + EPS
    return out, err


def mittag_leffler(rho, z, full_output=False):
    """Mittag-Leffler function E_rho(z) for 0 < rho <= 1 and z <= 0.

    Uses the power series while its cancellation error stays below 1e-11 and
    the completely-monotone integral representation

        E_rho(-t^rho) = sin(rho pi)/(rho pi) int_0^inf
                        exp(-t u^(1/rho)) / (u^2 + 2 u cos(rho pi) + 1) du

    beyond that.  Accepts scalars or arrays for ``z``.
    """
    rho = _check_rho(rho)
    z_arr = np.asarray(z, dtype=float)
    if np.any(np.isnan(z_arr)) or np.any(z_arr > 0):
        raise DomainError("mittag_leffler is defined here only for z <= 0")
    val, err = _ml_neg(rho, np.atleast_1d(-z_arr).astype(float))
    val = np.clip(val, 0.0, 1.0)
    if z_arr.ndim == 0:
        return _out(float(val[0]), float(err[0]), full_output)
    return _out(val.reshape(z_arr.shape), err.reshape(z_arr.shape), full_output)


# --------------------------------------------------------------------------
# Modified Bessel function of the first kind
# --------------------------------------------------------------------------


def _log_bessel_series(nu, x):
    # log I_nu(x) = logsumexp_k [(2k+nu) log(x/2) - log k! - log Gamma(k+nu+1)]
    half = math.log(x / 2.0)
    K = int(x + 10 * math.sqrt(x) + 40)
    k = np.arange(K, dtype=float)
    arg = k + nu + 1.0
    with np.errstate(divide="ignore", invalid="ignore"):
        lt = (2 * k + nu) * half - gammaln(k + 1.0) - gammaln(arg)
    # 1/Gamma vanishes at the poles (only arg = 0 can occur for nu >= -1).
    lt = np.where(arg <= 0, -np.inf, lt)
    m = lt.max()
    total = np.exp(lt - m).sum()
    return m + math.log(total), K * EPS


def _log_bessel_asymptotic(nu, x):
    # I_nu(x) ~ e^x / sqrt(2 pi x) * sum_k (-1)^k a_k(nu) / x^k
    mu = 4.0 * nu * nu
    term = 1.0
    total = 1.0
    last = 1.0
    for k in range(1, 200):
        term *= -(mu - (2 * k - 1) ** 2) / (k * 8.0 * x)
        if abs(term) > last:
            break
        total += term
        last = abs(term)
        if last < 1e-17 * abs(total):
            break
    return x - 0.5 * math.log(2 * math.pi * x) + math.log(total), last / abs(total) + 4 * EPS


def _asymptotic_ok(nu, x):
    return x >= BESSEL_SWITCH and x >= 2.0 * nu * nu


def log_bessel_i(nu, x):
    """log I_nu(x) for nu >= -1, x > 0; stays finite where I_nu overflows."""
    nu = float(nu)
    x = float(x)
    if x < 0 or math.isnan(x):
        raise DomainError(f"bessel_i needs x >= 0, got {x}")
    if nu < -1:
        raise DomainError(f"bessel_i needs nu >= -1, got {nu}")
    if x == 0:
        if nu == 0:
            return 0.0
        # I_{-1}(0) = I_1(0) = 0 and I_nu(0) = 0 for nu > 0
        if nu > 0 or nu == -1:
            return -math.inf
        return math.inf  # -1 < nu < 0: I_nu(x) ~ (x/2)^nu / Gamma(nu+1)
    if _asymptotic_ok(nu, x):
        return _log_bessel_asymptotic(nu, x)[0]
    return _log_bessel_series(nu, x)[0]


def bessel_i(nu, x, full_output=False):
    """Modified Bessel function I_nu(x) for nu >= -1 and x >= 0.

    Power series (all terms positive, so no cancellation) below
    ``max(25, 2 nu^2)``; Hankel asymptotic expansion above.
    """
    nu = float(nu)
    x = float(x)
    if x < 0 or math.isnan(x):
        raise DomainError(f"bessel_i needs x >= 0, got {x}")
    if nu < -1:
        raise DomainError(f"bessel_i needs nu >= -1, got {nu}")
    if x == 0:
        if nu == 0:
            return _out(1.0, 0.0, full_output)
        if nu > 0 or nu == -1:
            return _out(0.0, 0.0, full_output)
        raise DomainError("I_nu(0) is infinite for -1 < nu < 0")
    if _asymptotic_ok(nu, x):
        logv, rel = _log_bessel_asymptotic(nu, x)
    else:
        logv, rel = _log_bessel_series(nu, x)
    if logv > 709.0:
        raise OverflowError(f"I_{nu}({x}) overflows; use log_bessel_i")
    value = math.exp(logv)
    return _out(value, value * rel, full_output)
