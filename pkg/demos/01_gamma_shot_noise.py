"""Shot noise with exponential jumps settles into a gamma law.

Jumps of mean one arrive at rate lambda and decay at rate omega.  The
stationary value should be Gamma(lambda/omega, 1).  This script samples it,
checks the fit, follows one path, and checks the transient mean against
Campbell's formula.
"""

import numpy as np

from shotnoise import (Exponential, ExponentialResponse, Gamma, ShotNoiseModel, ks_band,
                       ks_distance, sample_stationary, sample_transient, simulate_path)

rng = np.random.default_rng(np.random.SeedSequence(2024).spawn(1)[0])
lam, omega = 2.0, 1.0
model = ShotNoiseModel(lam, Exponential(1.0), ExponentialResponse(omega))

n = 100_000
x = sample_stationary(model, n, tol=1e-4, rng=rng)
target = Gamma(lam / omega, 1.0)
print(f"stationary sample: n = {n}, mean {x.mean():.4f} (gamma mean {lam / omega:.1f})")
print(f"KS distance to Gamma({lam / omega:g}, 1): {ks_distance(x, target.cdf):.5f}"
      f" (99% band {ks_band(n):.5f})")

path = simulate_path(ShotNoiseModel(lam, Exponential(1.0), x0=5.0), 10.0, rng)
print(f"\none path from x0 = 5 over [0, 10]: {path.event_times.size} arrivals")
for t in (0.0, 1.0, 2.5, 5.0, 10.0):
    print(f"  X({t:4.1f}) = {path.at(t):.4f}")

xt = sample_transient(model, 10.0, 10_000, rng)
se = xt.std(ddof=1) / np.sqrt(xt.size)
print(f"\nE X(10) from 10^4 paths: {xt.mean():.4f} +/- {se:.4f} (Campbell: {lam / omega:.1f})")
