"""Best split of N half-duplex users into downlink and uplink sets."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .closed_form import dof_hd_only, dof_self_interference, dof_theorem1, dof_theorem2
from .core import FdConfig, HdSplitConfig


class Mode(str, Enum):
    FD_NO_SI = "fd-no-si"
    FD_WITH_SI = "fd-with-si"
    HD_ONLY = "hd-only"


def _fd_no_si(cfg: HdSplitConfig) -> Fraction:
    return dof_theorem1(cfg).value


_FORMULAS = {
    Mode.FD_NO_SI: _fd_no_si,
    Mode.FD_WITH_SI: dof_self_interference,
    Mode.HD_ONLY: dof_hd_only,
}


def mode_dof(cfg: HdSplitConfig, mode: Mode | str) -> Fraction:
    return _FORMULAS[Mode(mode)](cfg)


@dataclass(frozen=True)
class SplitResult:
    n1_opt: int
    n2_opt: int
    value: Fraction
    mode: Mode
    curve: tuple[tuple[int, Fraction], ...]


def split_curve(m1: int, m2: int, n: int, mode: Mode | str) -> list[tuple[int, Fraction]]:
    """Sum DoF for every split ``n1 = 0..n``, ``n2 = n - n1``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    formula = _FORMULAS[Mode(mode)]
    return [(n1, formula(HdSplitConfig(m1, m2, n1, n - n1))) for n1 in range(n + 1)]


def optimal_split(m1: int, m2: int, n: int, mode: Mode | str) -> SplitResult:
    """Exhaustive search over all ``n + 1`` splits; ties go to the smallest ``n1``."""
    mode = Mode(mode)
    curve = split_curve(m1, m2, n, mode)
    n1, value = curve[0]
    for k, v in curve[1:]:
        if v > value:
            n1, value = k, v
    return SplitResult(n1, n - n1, value, mode, tuple(curve))


def saturation_threshold(m1: int, m2: int, n_max: int) -> int | None:
    """Smallest ``n`` from which the no-SI optimum equals ``min(M1+M2, n')`` for all ``n' <= n_max``.

    Returns ``None`` if even ``n_max`` itself does not match.
    """
    threshold = None
    for n in range(n_max, 0, -1):
        target = dof_theorem2(FdConfig(m1, m2, n))
        if optimal_split(m1, m2, n, Mode.FD_NO_SI).value != target:
            break
        threshold = n
    return threshold
