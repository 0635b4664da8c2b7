"""Moving between a selfdecomposable law, its background driving transform
and the jumps that generate it as shot noise.
"""

import numpy as np

from shotnoise import (Bessel, Gamma, PositiveLinnik, bdlp_from_sd, gamma_jump_transform,
                       invert_lt, jump_lt_from_sn, law_transform, sd_from_bdlp,
                       sn_lt_from_jumps)

s = np.array([0.01, 0.1, 1.0, 10.0, 100.0])

print("gamma(2, 1): log Psi(s) = s Phi'(s)/Phi(s) should equal -2 s/(1 + s)")
phi = law_transform(Gamma(2.0, 1.0))
psi = bdlp_from_sd(phi)
for si, got in zip(s, psi.log(s)):
    print(f"  s = {si:7.2f}   log Psi = {got:+.10f}   closed form = {-2 * si / (1 + si):+.10f}")
back = sd_from_bdlp(psi)
print(f"  round trip max error: {np.max(np.abs(back(s) - phi(s))):.2e}")

print("\npositive Linnik(1/2, 1) generates itself at rho = 1/2")
linnik = PositiveLinnik(0.5, 1.0)
jumps = jump_lt_from_sn(law_transform(linnik), 0.5)
print(f"  max |G - Phi| on the grid: {np.max(np.abs(jumps(s) - linnik.lt(s))):.2e}")
regen = sn_lt_from_jumps(linnik, 0.5)
print(f"  rebuilt stationary transform error: {np.max(np.abs(regen(s) - linnik.lt(s))):.2e}")

print("\nBessel(1) law: shot noise with Gamma(2, 1) jumps, inverted numerically")
xs = np.array([0.5, 1.0, 2.0, 5.0, 10.0])
inv = invert_lt(gamma_jump_transform(1.0, 2), xs)
for xi, a, b in zip(xs, inv, Bessel(1.0).cdf(xs)):
    print(f"  F({xi:4.1f}): inversion {a:.8f}   mixture series {b:.8f}")
g = jump_lt_from_sn(law_transform(Bessel(1.0)), 1.0)
print(f"  recovered jump transform vs (1 + s)^-2: "
      f"{np.max(np.abs(g(s) - (1 + s) ** -2.0)):.2e}")
