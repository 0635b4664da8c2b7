"""Sorting positive laws by their behaviour at zero.

A shot-noise law has a CDF that varies regularly at 0 with a positive index.
Slow variation (index 0) rules out selfdecomposability.  Rapid variation is
what an SD law with infinite k(0+) looks like.
"""

import numpy as np

from shotnoise import (Burr, Degenerate, Exponential, Gamma, HalfCauchy, LogCauchy, LogPareto,
                       PositiveStable, ShotNoiseModel, Weibull, classify, linnik_tail_limit,
                       linnik_tail_ratio, sample_stationary, subordinate)

cases = [
    ("Gamma(0.5, 1)", Gamma(0.5, 1.0)),
    ("Weibull(0.5, 1)", Weibull(0.5, 1.0)),
    ("Burr(0.7, 1, 2)", Burr(0.7, 1.0, 2.0)),
    ("half-Cauchy", HalfCauchy()),
    ("log-Cauchy", LogCauchy()),
    ("positive 1/2-stable", PositiveStable(0.5)),
    ("point mass at 1", Degenerate(1.0)),
    ("log-Pareto", LogPareto()),
    ("gamma subordinated by gamma", subordinate(Gamma(1.0, 1.0), Gamma(1.0, 1.0))),
]
print(f"{'law':30s} {'verdict':24s} {'index':>8s}  ci")
for name, law in cases:
    rep = classify(law)
    print(f"{name:30s} {rep.verdict.value:24s} {rep.index:8.3f}  "
          f"[{rep.ci[0]:.3f}, {rep.ci[1]:.3f}]")

rng = np.random.default_rng(np.random.SeedSequence(7).spawn(1)[0])
print("\nfrom stationary samples (n = 10^5, exponential jumps):")
for rho in (0.5, 1.0, 2.0):
    x = sample_stationary(ShotNoiseModel(rho, Exponential(1.0)), 100_000, 1e-4, rng)
    rep = classify(x, rng=rng)
    print(f"  rho = {rho:3.1f}: {rep.verdict.value}, index {rep.index:.3f} "
          f"[{rep.ci[0]:.3f}, {rep.ci[1]:.3f}]")

print("\npositive Linnik(1/2, beta): (1 - F(x)) / F(1/x) as x grows")
for beta in (1.0, 2.0):
    vals = ", ".join(f"{linnik_tail_ratio(0.5, beta, x):.4f}" for x in (1e2, 1e3, 1e4))
    print(f"  beta = {beta:g}: {vals}  -> limit {linnik_tail_limit(0.5, beta):.4f}")
