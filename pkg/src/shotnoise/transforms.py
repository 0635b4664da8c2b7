"""Laplace-transform calculus for positive selfdecomposable laws.

A :class:`LaplaceTransform` is an evaluable ``s -> Phi(s) = E exp(-s eta)``
stored through its logarithm.  The constructors here move between

* a selfdecomposable law and its background driving transform Psi,
  ``log Phi(s) = int_0^s log Psi(r) dr / r`` and ``log Psi(s) = s Phi'(s)/Phi(s)``;
* a jump law and the stationary law of the exponential-response shot noise
  with ``rho = lambda/omega``,
  ``Phi(s) = exp(-rho int_0^s (1 - E exp(-u xi)) du/u)``, and back,
  ``E exp(-s xi) = 1 + s (log Phi)'(s) / rho``;
* two subordinators and their composition ``Phi_2(-log Phi_1(s))``.

:func:`invert_lt` recovers a CDF (or density) from a transform numerically
and serves as an independent cross-check throughout the test suite.
"""

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np
from scipy import integrate
from scipy.special import comb, factorial

from .distributions import NamedLaw, law_from_dict
from .errors import (InvalidParameterError, InvalidTransformError, InversionWarning,
                     NumericalError, PositivityWarning, SingularIntegrandError,
                     UnsupportedOperationError)


class Provenance(str, Enum):
    CLOSED_FORM = "closed-form"
    SHOT_NOISE = "shot-noise"  # stationary law built from a jump transform
    SD_FROM_BDLP = "sd-from-bdlp"
    BDLP_FROM_SD = "bdlp-from-sd"
    JUMPS_FROM_SN = "jumps-from-sn"
    SUBORDINATED = "subordinated"
    NUMERIC = "numeric"


def _elementwise(fn):
    """Lift a scalar function to arrays (real or complex)."""

    def wrapped(s):
        arr = np.asarray(s)
        if arr.ndim == 0:
            return fn(arr[()])
        out = np.empty(arr.shape, dtype=complex if np.iscomplexobj(arr) else float)
        for idx, v in np.ndenumerate(arr):
            out[idx] = fn(v)
        return out

    return wrapped


def _richardson_derivative(f, s):
    """Central difference with one Richardson step; the step is real, so the
    result is also the complex derivative of an analytic ``f``."""
    s = np.asarray(s)
    h = 1e-3 * np.maximum(np.abs(s), 1e-12)
    d1 = (f(s + h) - f(s - h)) / (2 * h)
    d2 = (f(s + h / 2) - f(s - h / 2)) / h
    return (4 * d2 - d1) / 3


@dataclass(frozen=True)
class LaplaceTransform:
    """Laplace transform of a law on [0, inf), held as ``log Phi``.

    ``log_fn`` must accept numpy arrays; when ``complex_ok`` it must also be
    valid for complex ``s`` with positive real part.  ``dlog_fn`` is the
    analytic derivative of ``log_fn`` when known.
    """

    log_fn: Callable
    dlog_fn: Optional[Callable] = None
    provenance: Provenance = Provenance.NUMERIC
    label: str = ""
    complex_ok: bool = False
    sd_known: Optional[bool] = None  # selfdecomposability asserted by construction

    def log(self, s):
        return self.log_fn(s)

    def __call__(self, s):
        v = np.exp(self.log_fn(s))
        return float(v) if np.ndim(v) == 0 and not np.iscomplexobj(v) else v

    def dlog(self, s):
        """d/ds log Phi(s)."""
        if self.dlog_fn is not None:
            return self.dlog_fn(s)
        return _richardson_derivative(self.log_fn, s)

    def derivative(self, s):
        return self(s) * self.dlog(s)

    def local_index(self, s):
        """-s Phi'(s) / Phi(s); tends to the index of regular variation at infinity."""
        return -np.asarray(s) * self.dlog(s)

    @property
    def derivative_mode(self):
        return "analytic" if self.dlog_fn is not None else "central-difference"

    def table(self, grid):
        """Rows (s, Phi, log Phi, local index) over ``grid``."""
        grid = np.asarray(grid, dtype=float)
        lp = np.asarray(self.log(grid), dtype=float)
        li = np.asarray(self.local_index(grid), dtype=float)
        return np.column_stack([grid, np.exp(lp), lp, li])

    def __repr__(self):
        return f"LaplaceTransform({self.label or self.provenance.value})"


def law_transform(law):
    """Transform of a catalog law (closed form where one exists)."""
    if not law.has_lt:
        raise UnsupportedOperationError(f"no Laplace transform available for {law.kind}")
    analytic = type(law).dlog_lt is not NamedLaw.dlog_lt
    return LaplaceTransform(
        log_fn=law.log_lt,
        dlog_fn=law.dlog_lt if analytic else None,
        provenance=Provenance.CLOSED_FORM if law.lt_complex else Provenance.NUMERIC,
        label=repr(law),
        complex_ok=law.lt_complex,
        sd_known=law.sd_known,
    )


def from_function(phi, label="", complex_ok=False, dphi=None):
    """Wrap a plain callable ``s -> Phi(s)``."""
    dlog = None if dphi is None else (lambda s: dphi(s) / phi(s))
    return LaplaceTransform(lambda s: np.log(phi(s)), dlog, Provenance.NUMERIC, label, complex_ok)


def _as_transform(obj):
    if isinstance(obj, LaplaceTransform):
        return obj
    if isinstance(obj, NamedLaw):
        return law_transform(obj)
    raise TypeError(f"expected a LaplaceTransform or NamedLaw, got {type(obj).__name__}")


def gamma_jump_transform(rho, n):
    """Stationary transform for Gamma(n, 1) jumps in closed form:
    (1+s)^-rho prod_{i<n} exp(-(rho/i)(1 - (1+s)^-i)).

    For n = 2 this is the Bessel law; n = 1 gives Gamma(rho, 1).
    """
    rho = float(rho)
    n = int(n)
    if rho <= 0 or n < 1:
        raise InvalidParameterError("need rho > 0 and integer n >= 1")

    def log_fn(s):
        s = np.asarray(s)
        out = -rho * np.log1p(s)
        for i in range(1, n):
            out = out - (rho / i) * (1 - (1 + s) ** (-i))
        return out

    def dlog_fn(s):
        s = np.asarray(s)
        out = -rho / (1 + s)
        for i in range(1, n):
            out = out - rho * (1 + s) ** (-i - 1)
        return out

    return LaplaceTransform(log_fn, dlog_fn, Provenance.CLOSED_FORM,
                            f"gamma-jump shot noise(rho={rho:g}, n={n})", True, True)


# --------------------------------------------------------------------------
# int_0^s g(u) du/u along the ray from 0 to s
# --------------------------------------------------------------------------

_QUAD = dict(epsabs=1e-13, epsrel=1e-12, limit=400)


def _ray_log_integral(g, s):
    """int_0^s g(u) du / u for g(0+) = 0, along the segment [0, s].

    On |u| <= 1 the substitution u = w^2 tames algebraic behaviour
    g(u) ~ u^a at the origin; beyond |u| = 1 the integral runs in log |u|.
    """
    if s == 0:
        return 0.0
    cplx = np.iscomplexobj(s)
    if cplx and complex(s).imag == 0:
        s, cplx = float(complex(s).real), False
    r = abs(s)
    e = s / r
    r0 = min(r, 1.0)

    def inner(w):
        if w == 0:
            return 0.0
        return 2.0 * g(e * r0 * w * w) / w

    val, _ = integrate.quad(inner, 0.0, 1.0, complex_func=cplx, **_QUAD)
    if r > 1.0:
        v2, _ = integrate.quad(lambda y: g(e * math.exp(y)), 0.0, math.log(r),
                               complex_func=cplx, **_QUAD)
        val = val + v2
    if not np.isfinite(val):
        raise NumericalError(f"quadrature failed at s={s}")
    return val


def sn_lt_from_jumps(jump_lt, rho):
    """Stationary shot-noise transform for jumps with transform ``jump_lt``
    and ``rho = lambda/omega``:

        log Phi(s) = -rho int_0^s (1 - G(u)) du / u.
    """
    G = _as_transform(jump_lt)
    rho = float(rho)
    if not rho > 0:
        raise InvalidParameterError(f"rho must be positive, got {rho}")

    def one_minus_g(u):
        return -np.expm1(G.log(u))

    @_elementwise
    def log_fn(s):
        return -rho * _ray_log_integral(one_minus_g, s)

    def dlog_fn(s):
        s = np.asarray(s)
        return -rho * one_minus_g(s) / s

    return LaplaceTransform(log_fn, dlog_fn, Provenance.SHOT_NOISE,
                            f"shot noise(rho={rho:g}, jumps={G.label})", G.complex_ok, True)


def _vanishes_at_zero(log_fn):
    """log_fn(s) -> 0 as s -> 0+, judged on s = 1e-8, 1e-16, 1e-24.  Algebraic
    decay such as s**0.05 counts; logarithmic decay, for which the integral of
    log_fn(s)/s still diverges, does not."""
    v = [abs(complex(np.asarray(log_fn(s)))) for s in (1e-8, 1e-16, 1e-24)]
    if not all(map(math.isfinite, v)):
        return False
    return v[2] < 1e-6 or v[2] < 0.8 * v[0]


def sd_from_bdlp(psi):
    """Selfdecomposable transform from its background driving transform:
    log Phi(s) = int_0^s log Psi(r) dr / r."""
    psi = _as_transform(psi)
    if not _vanishes_at_zero(psi.log):
        near0 = abs(complex(np.asarray(psi.log(1e-24))))
        raise SingularIntegrandError(
            f"log Psi(0+) = {near0:.3g} != 0: the integral diverges at the origin")

    @_elementwise
    def log_fn(s):
        return _ray_log_integral(psi.log, s)

    def dlog_fn(s):
        return psi.log(s) / np.asarray(s)

    return LaplaceTransform(log_fn, dlog_fn, Provenance.SD_FROM_BDLP,
                            f"sd-from-bdlp({psi.label})", psi.complex_ok, True)


def bdlp_positivity_excess(psi, grid=None):
    """max(log Psi) over ``grid``; a positive value means Psi is not a Laplace
    transform, i.e. evidence that the source law is not selfdecomposable."""
    grid = np.logspace(-2, 2, 40) if grid is None else np.asarray(grid, dtype=float)
    return float(np.max(np.asarray(psi.log(grid), dtype=float)))


def bdlp_from_sd(phi, check_grid=None, tol=1e-8):
    """Background driving transform: log Psi(s) = s Phi'(s) / Phi(s).

    Emits :class:`PositivityWarning` if log Psi > tol anywhere on
    ``check_grid`` (default: 40 log-spaced points in [0.01, 100]).
    """
    phi = _as_transform(phi)

    def log_fn(s):
        return np.asarray(s) * phi.dlog(s)

    psi = LaplaceTransform(log_fn, None, Provenance.BDLP_FROM_SD,
                           f"bdlp({phi.label})", phi.complex_ok)
    excess = bdlp_positivity_excess(psi, check_grid)
    if excess > tol:
        warnings.warn(f"log Psi reaches {excess:.3g} > 0: not the transform of an SD law",
                      PositivityWarning, stacklevel=2)
    return psi


def jump_lt_from_sn(phi, rho, check_grid=None, tol=1e-6):
    """Jump transform generating the shot-noise law ``phi`` at ``rho``:
    E exp(-s xi) = 1 + s (log Phi)'(s) / rho.

    Raises :class:`InvalidTransformError` when the result leaves [0, 1] on the
    check grid by more than ``tol``: ``phi`` is then not shot noise with this rho.
    """
    phi = _as_transform(phi)
    rho = float(rho)
    if not rho > 0:
        raise InvalidParameterError(f"rho must be positive, got {rho}")

    def g(s):
        return 1.0 + np.asarray(s) * phi.dlog(s) / rho

    grid = np.logspace(-3, 3, 49) if check_grid is None else np.asarray(check_grid, dtype=float)
    vals = np.asarray(g(grid), dtype=float)
    if np.any(vals < -tol) or np.any(vals > 1 + tol) or not np.all(np.isfinite(vals)):
        raise InvalidTransformError(
            f"jump transform leaves [0, 1] (range {vals.min():.4g}..{vals.max():.4g}); "
            f"not a shot-noise transform with rho={rho:g}")

    def log_fn(s):
        v = g(s)
        if np.iscomplexobj(v):
            return np.log(v)
        return np.log(np.clip(v, 1e-300, None))

    return LaplaceTransform(log_fn, None, Provenance.JUMPS_FROM_SN,
                            f"jumps({phi.label}, rho={rho:g})", phi.complex_ok)


def subordinate(phi1, phi2):
    """Transform of X1(X2(1)) for independent subordinators X1, X2 with
    transforms phi1, phi2 at time one: Phi3(s) = Phi2(-log Phi1(s))."""
    p1 = _as_transform(phi1)
    p2 = _as_transform(phi2)

    def log_fn(s):
        return p2.log(-p1.log(s))

    dlog_fn = None
    if p1.dlog_fn is not None and p2.dlog_fn is not None:
        def dlog_fn(s):
            return p2.dlog(-p1.log(s)) * (-p1.dlog(s))

    return LaplaceTransform(log_fn, dlog_fn, Provenance.SUBORDINATED,
                            f"subordinate({p1.label} by {p2.label})",
                            p1.complex_ok and p2.complex_ok)


def check_transform(phi, grid=None, tol=1e-9):
    """Grid checks of the complete-monotonicity proxies.

    Returns a dict of booleans: values in (0, 1], Phi(0+) = 1, nonincreasing,
    log-convex.
    """
    phi = _as_transform(phi)
    grid = np.logspace(-4, 3, 60) if grid is None else np.sort(np.asarray(grid, dtype=float))
    lp = np.asarray(phi.log(grid), dtype=float)
    slopes = np.diff(lp) / np.diff(grid)
    return {
        "in_range": bool(np.all(lp <= tol) and np.all(np.isfinite(lp))),
        "starts_at_one": _vanishes_at_zero(phi.log),
        "nonincreasing": bool(np.all(np.diff(lp) <= tol)),
        "log_convex": bool(np.all(np.diff(slopes) >= -tol * (1 + np.abs(slopes[1:])))),
    }


# --------------------------------------------------------------------------
# Numerical inversion
# --------------------------------------------------------------------------

EULER_A = 18.4
EULER_N = 15
EULER_M = 11
STEHFEST_N = 14


def _euler_invert(fhat, t, A=EULER_A, N=EULER_N, M=EULER_M):
    """Abate-Whitt Euler-summation inversion of a Bromwich integral on the
    line Re s = A / (2t); discretization error ~ exp(-A)."""
    t = np.asarray(t, dtype=float)[:, None]
    k = np.arange(N + M + 1)
    s = (A + 2j * math.pi * k[None, :]) / (2 * t)
    vals = np.real(fhat(s))
    vals[:, 0] *= 0.5
    terms = np.where(k % 2 == 0, 1.0, -1.0)[None, :] * vals
    partial = np.cumsum(terms, axis=1)[:, N:]
    w = comb(M, np.arange(M + 1)) / 2.0 ** M
    return math.exp(A / 2) / t[:, 0] * (partial @ w)


def _stehfest_weights(N):
    half = N // 2
    V = np.zeros(N)
    for k in range(1, N + 1):
        total = 0.0
        for j in range((k + 1) // 2, min(k, half) + 1):
            total += (j ** half * factorial(2 * j)
                      / (factorial(half - j) * factorial(j) * factorial(j - 1)
                         * factorial(k - j) * factorial(2 * j - k)))
        V[k - 1] = (-1) ** (k + half) * total
    return V


def _stehfest_invert(fhat, t, N=STEHFEST_N):
    """Gaver-Stehfest inversion; real arguments only."""
    t = np.asarray(t, dtype=float)[:, None]
    V = _stehfest_weights(N)
    k = np.arange(1, N + 1)[None, :]
    s = k * math.log(2) / t
    return math.log(2) / t[:, 0] * (np.real(fhat(s)) @ V)


def invert_lt(phi, x, target="cdf", method="auto", warn_tol=1e-4):
    """Recover the CDF (or density, ``target="pdf"``) at ``x > 0`` from a
    Laplace transform.

    The CDF is the inverse transform of Phi(s)/s.  ``method="euler"`` (the
    default whenever the transform accepts complex arguments) uses the
    Abate-Whitt Euler algorithm; ``"stehfest"`` the Gaver-Stehfest formula on
    the real axis.  A second run with a different truncation gives a
    precision estimate; an :class:`InversionWarning` is emitted when it
    exceeds ``warn_tol``.
    """
    phi = _as_transform(phi)
    x_arr = np.asarray(x, dtype=float)
    flat = np.atleast_1d(x_arr).ravel()
    if np.any(flat <= 0):
        raise InvalidParameterError("inversion points must be positive")
    if target == "cdf":
        def fhat(s):
            return np.exp(phi.log(s)) / s
    elif target == "pdf":
        def fhat(s):
            return np.exp(phi.log(s))
    else:
        raise InvalidParameterError(f"target must be 'cdf' or 'pdf', got {target!r}")
    if method == "auto":
        method = "euler" if phi.complex_ok else "stehfest"
    if method == "euler":
        if not phi.complex_ok:
            raise UnsupportedOperationError("Euler inversion needs complex evaluation")
        val = _euler_invert(fhat, flat)
        alt = _euler_invert(fhat, flat, N=EULER_N + 8)
    elif method == "stehfest":
        val = _stehfest_invert(fhat, flat)
        alt = _stehfest_invert(fhat, flat, N=STEHFEST_N - 2)
    else:
        raise InvalidParameterError(f"unknown inversion method {method!r}")
    achieved = float(np.max(np.abs(val - alt)))
    if not np.all(np.isfinite(val)):
        raise NumericalError("inversion produced non-finite values")
    if achieved > warn_tol:
        warnings.warn(f"inversion precision estimate {achieved:.2g} exceeds {warn_tol:g}",
                      InversionWarning, stacklevel=2)
    out = val.reshape(x_arr.shape)
    return float(out) if x_arr.ndim == 0 else out


# --------------------------------------------------------------------------
# JSON descriptors (used by the command line front end)
# --------------------------------------------------------------------------


def transform_from_dict(desc):
    """Build a transform from a JSON descriptor.

    Accepted forms::

        {"kind": "Gamma", "params": {...}}                  catalog law
        {"type": "law", "law": {...}}
        {"type": "shot_noise", "jumps": <desc>, "rho": r}
        {"type": "gamma_jumps", "rho": r, "n": n}
        {"type": "sd_from_bdlp", "bdlp": <desc>}
        {"type": "bdlp", "sd": <desc>}
        {"type": "jumps", "sn": <desc>, "rho": r}
        {"type": "subordinate", "inner": <desc>, "outer": <desc>}
    """
    if not isinstance(desc, dict):
        raise InvalidParameterError(f"transform descriptor must be an object, got {desc!r}")
    if "kind" in desc:
        return law_transform(law_from_dict(desc))
    kind = desc.get("type")
    try:
        if kind == "law":
            return law_transform(law_from_dict(desc["law"]))
        if kind == "shot_noise":
            return sn_lt_from_jumps(transform_from_dict(desc["jumps"]), desc["rho"])
        if kind == "gamma_jumps":
            return gamma_jump_transform(desc["rho"], desc.get("n", 2))
        if kind == "sd_from_bdlp":
            return sd_from_bdlp(transform_from_dict(desc["bdlp"]))
        if kind == "bdlp":
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", PositivityWarning)
                return bdlp_from_sd(transform_from_dict(desc["sd"]))
        if kind == "jumps":
            return jump_lt_from_sn(transform_from_dict(desc["sn"]), desc["rho"])
        if kind == "subordinate":
            return subordinate(transform_from_dict(desc["inner"]),
                               transform_from_dict(desc["outer"]))
    except KeyError as exc:
        raise InvalidParameterError(f"descriptor {desc!r} is missing {exc}") from exc
    raise InvalidParameterError(f"unknown transform type {kind!r}")
