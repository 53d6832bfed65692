"""
Sum DoF of a full-duplex base station serving half-duplex users
================================================================

A base station with M1 transmit and M2 receive antennas serves N1
single-antenna downlink users and N2 single-antenna uplink users at once.
Uplink users interfere with downlink users, and the sum DoF has a compact
closed form. This script walks through a few configurations.
"""

# %%
# One configuration, with the term that binds
from fddof import HdSplitConfig, dof_hd_only, dof_theorem1, format_rational

cfg = HdSplitConfig(m1=2, m2=2, n1=1, n2=4)
b = dof_theorem1(cfg)
print(f"{cfg}: sum DoF {format_rational(b.value)}, binding term {b.binding_term}")
for label, value in b.terms:
    print(f"  {label:>12} = {format_rational(value)}")

# %%
# Compare with switching the base station between uplink and downlink.
for cfg in [HdSplitConfig(5, 5, 12, 12), HdSplitConfig(16, 8, 10, 20), HdSplitConfig(10, 10, 1, 1)]:
    fd, hd = dof_theorem1(cfg).value, dof_hd_only(cfg)
    print(f"{cfg}: FD {format_rational(fd)}, HD-only {format_rational(hd)}, gain x{float(fd / hd):.2f}")

# %%
# With enough users on both sides the answer collapses to min(2M, N)
# when both sides have M antennas.
m = 5
print([format_rational(dof_theorem1(HdSplitConfig(m, m, n, n)).value) for n in range(1, 13)])
