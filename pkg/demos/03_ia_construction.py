"""
Aligning uplink interference at a single downlink user
======================================================

With one downlink user and an N2-slot symbol extension, every uplink user
rescales user 1's beams by the ratio of interference channels. All uplink
interference then lands in the same M2-dimensional subspace at the
downlink user, leaving N2 - M2 clean dimensions for downlink data.
"""

# %%
import numpy as np

from fddof import build_beamformers, gen_channels, monte_carlo, verify

ch = gen_channels(m1=2, m2=2, n2=4, t=4, seed=7)
bf = build_beamformers(ch, m1=2, m2=2, seed=7)
print("DL beams:", bf.dl.shape, " UL beams per user:", bf.ul.shape[1:])

# %%
# Interference seen by the downlink user: identical for every uplink user.
interference = ch.h[:, :, None] * bf.ul
print("max deviation from user 1:", np.abs(interference - interference[0]).max())

report = verify(ch, bf)
print(report)

# %%
# Many random draws. Ranks are almost surely full, yet heavy-tailed channel
# ratios now and then make a user's beams nearly parallel.
for m2, n2 in [(1, 2), (2, 4), (3, 5)]:
    r = monte_carlo(2, m2, n2, trials=200, seed=1)
    print(f"(M2={m2}, N2={n2}): {r.failures} failures, symbols/slot {r.symbols_per_slot}")
