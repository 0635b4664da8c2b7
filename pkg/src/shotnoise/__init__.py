"""Shot noise processes, selfdecomposable laws and their Laplace-transform
calculus, with regular-variation diagnostics at zero."""

from .diagnostics import (DiagnosisReport, IndexEstimate, Method, Verdict, classify,
                          ks_band, ks_distance, ks_two_sample, linnik_tail_limit,
                          linnik_tail_ratio, rv_index_at_zero, rv_index_from_lt)
from .distributions import (KINDS, Bessel, Burr, Degenerate, Exponential, Gamma,
                            GeneralizedLinnik, HalfCauchy, LogCauchy, LogPareto, NamedLaw,
                            PositiveLinnik, PositiveStable, Weibull, cdf, law_from_dict, lt,
                            pdf, sample)
from .engine import (ConvergenceStatus, ConvergenceVerdict, ExponentialResponse,
                     IndicatorResponse, PowerResponse, ShotNoiseModel, ShotNoisePath,
                     TabulatedResponse, existence_check, levy_measure_tail, sample_stationary,
                     sample_transient, shot_noise_transform, simulate_path, truncation_horizon)
from .errors import *  # noqa: F401,F403
from .special import EvalResult, bessel_i, gamma_fn, log_bessel_i, mittag_leffler
from .transforms import (LaplaceTransform, Provenance, bdlp_from_sd, check_transform,
                         gamma_jump_transform, invert_lt, jump_lt_from_sn, law_transform,
                         sd_from_bdlp, sn_lt_from_jumps, subordinate, transform_from_dict)

__version__ = "0.1.0"
