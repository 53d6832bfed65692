"""
The same number from two linear programs
========================================

An achievable scheme time-shares two interference-alignment modes with
loads (l1, l2); a converse bounds the per-direction DoF (d1, d2). Both are
two-variable LPs, solved here exactly by listing the corners of the
feasible polygon.
"""

# %%
from fddof import HdSplitConfig, dof_theorem1, format_rational
from fddof.lp import enumerate_corners, solve_achievable, solve_converse


def show(point):
    return "(" + ", ".join(format_rational(x) for x in point) + ")"


cfg = HdSplitConfig(1, 1, 2, 2)
print("achievable corners:", [show(p) for p in enumerate_corners(cfg, "achievable")])
ach = solve_achievable(cfg)
print(f"best load {show(ach.argmax.as_tuple())} gives {format_rational(ach.value)}")

# %%
# The converse optimum meets the achievable one, and both meet the
# closed form.
for cfg in [HdSplitConfig(3, 3, 2, 2), HdSplitConfig(2, 2, 1, 4), HdSplitConfig(16, 8, 1, 4)]:
    a, c = solve_achievable(cfg), solve_converse(cfg)
    print(
        f"{cfg}: achievable {format_rational(a.value)} at {show(a.argmax.as_tuple())}, "
        f"converse {format_rational(c.value)} at {show(c.argmax)}, "
        f"closed form {format_rational(dof_theorem1(cfg).value)}"
    )
