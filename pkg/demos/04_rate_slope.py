"""
Reading DoF off a rate curve
============================

DoF is a high-SNR slope. Here zero-forcing receivers turn the alignment
scheme into finite-SNR rates, and a regression of sum rate on
0.5*log2(P) estimates the slope.
"""

# %%
from fddof import estimate_dof_slope, expected_dof
from fddof.rate_sim import DEFAULT_POWERS

for m2, n2 in [(1, 2), (2, 4), (3, 5)]:
    est = estimate_dof_slope(2, m2, n2, DEFAULT_POWERS, seed=0, trials=20)
    target = expected_dof(m2, n2)
    print(f"(M2={m2}, N2={n2}) slope {est.slope:.3f}, target {float(target):.3f}, "
          f"off by {est.relative_error(target):.1%}")

# %%
# The curve itself. At the low end the weakest uplink streams are still
# below the noise floor, which drags the fitted slope down.
est = estimate_dof_slope(2, 3, 5, DEFAULT_POWERS, seed=0, trials=20)
for p, rate in est.points:
    print(f"P = {p:8.0e}  rate = {rate:7.3f} bits/slot")
