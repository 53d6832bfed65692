"""
Splitting a user population between uplink and downlink
=======================================================

Given N half-duplex users, which N1 + N2 = N split maximizes the sum DoF?
We compare a full-duplex base station with and without self-interference
against a base station that alternates between the two directions.
"""

# %%
from fddof import Mode, optimal_split, saturation_threshold
from fddof.figures import split_curve_table

for mode in Mode:
    r = optimal_split(16, 8, 50, mode)
    print(f"{mode.value:>10}: best split N1={r.n1_opt}, N2={r.n2_opt}, sum DoF {r.value}")

# %%
# Once self-interference is present, the best split does no better than
# plain half-duplex operation.
same = all(
    optimal_split(16, 8, n, Mode.FD_WITH_SI).value == optimal_split(16, 8, n, Mode.HD_ONLY).value
    for n in range(1, 51)
)
print("with-SI optimum equals HD-only optimum for N = 1..50:", same)

# %%
# Without self-interference the optimum reaches min(M1 + M2, N) once the
# population is large enough.
print("saturation from N =", saturation_threshold(16, 8, 50))

rows = split_curve_table(16, 8, 50)
print("N1  FD   SI   HD")
for r in rows[::5]:
    print(f"{r['n1']:>2}  {float(r['fd-bs-hd-user']):4.1f} {float(r['fd-with-si']):4.1f} {float(r['hd-only']):4.1f}")
