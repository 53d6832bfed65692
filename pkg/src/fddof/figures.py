"""Sweep tables behind the sum-DoF comparison plots.

Each function returns a list of row dicts: the sweep variables as ints,
then one exact :class:`~fractions.Fraction` per curve in :data:`CURVES`.
"""

from __future__ import annotations

from fractions import Fraction

from .closed_form import dof_hd_only, dof_self_interference, dof_theorem1, dof_theorem2
from .core import FdConfig, HdSplitConfig
from .scheduler import Mode, optimal_split

FD_HD_USER = "fd-bs-hd-user"
FD_FD_USER = "fd-bs-fd-user"
FD_WITH_SI = "fd-with-si"
HD_ONLY = "hd-only"
CURVES = (FD_HD_USER, FD_FD_USER, FD_WITH_SI, HD_ONLY)

FIGURES = ("ex1", "fd-sweep", "split-curve", "optimal-split")


def _curves(cfg: HdSplitConfig) -> dict[str, Fraction]:
    return {
        FD_HD_USER: dof_theorem1(cfg).value,
        FD_FD_USER: dof_theorem2(FdConfig(cfg.m1, cfg.m2, cfg.n1 + cfg.n2)),
        FD_WITH_SI: dof_self_interference(cfg),
        HD_ONLY: dof_hd_only(cfg),
    }


def symmetric_sweep(m: int = 5, n_min: int = 1, n_max: int = 20) -> list[dict]:
    """(M, M, N, N) network against N; the FD-user curve uses N users."""
    rows = []
    for n in range(n_min, n_max + 1):
        cfg = HdSplitConfig(m, m, n, n)
        curves = _curves(cfg)
        curves[FD_FD_USER] = dof_theorem2(FdConfig(m, m, n))
        rows.append({"n": n, **curves})
    return rows


def fd_sweep(
    m1: int = 16, m2: int = 8, ratio: int = 2, n1_min: int = 1, n1_max: int = 25
) -> list[dict]:
    """N2 = ratio * N1; the FD-user curve uses N = N1 + N2 users."""
    rows = []
    for n1 in range(n1_min, n1_max + 1):
        cfg = HdSplitConfig(m1, m2, n1, ratio * n1)
        rows.append({"n1": n1, "n2": cfg.n2, "n": cfg.n1 + cfg.n2, **_curves(cfg)})
    return rows


def split_curve_table(m1: int = 16, m2: int = 8, n: int = 50) -> list[dict]:
    """Every split N1 + N2 = n of a fixed user population."""
    return [
        {"n1": n1, "n2": n - n1, **_curves(HdSplitConfig(m1, m2, n1, n - n1))}
        for n1 in range(n + 1)
    ]


def optimal_split_table(m1: int = 16, m2: int = 8, n_min: int = 1, n_max: int = 50) -> list[dict]:
    """Best split per curve for each population size n."""
    rows = []
    for n in range(n_min, n_max + 1):
        rows.append(
            {
                "n": n,
                FD_HD_USER: optimal_split(m1, m2, n, Mode.FD_NO_SI).value,
                FD_FD_USER: dof_theorem2(FdConfig(m1, m2, n)),
                FD_WITH_SI: optimal_split(m1, m2, n, Mode.FD_WITH_SI).value,
                HD_ONLY: optimal_split(m1, m2, n, Mode.HD_ONLY).value,
            }
        )
    return rows


def mode_ordering_violations(rows: list[dict]) -> list[dict]:
    """Rows breaking hd-only <= fd-with-si <= fd-bs-hd-user <= fd-bs-fd-user."""
    return [
        r
        for r in rows
        if not (r[HD_ONLY] <= r[FD_WITH_SI] <= r[FD_HD_USER] <= r[FD_FD_USER])
    ]


def hd_matches_fd_from(rows: list[dict], key: str) -> int | None:
    """Smallest sweep value from which the HD-user curve equals the FD-user curve to the end."""
    threshold = None
    for r in reversed(rows):
        if r[FD_HD_USER] != r[FD_FD_USER]:
            break
        threshold = r[key]
    return threshold
