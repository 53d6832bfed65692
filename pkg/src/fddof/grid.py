"""Exhaustive cross-checks of the DoF formulas over a box of configurations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .closed_form import (
    dof_hd_only,
    dof_piecewise_five_case,
    dof_self_interference,
    dof_theorem1,
    dof_theorem1_n1_special,
    dof_theorem2,
)
from .core import FdConfig, HdSplitConfig
from .lp import solve_achievable, solve_converse


def _triple(cfg):
    v = dof_theorem1(cfg).value
    return solve_achievable(cfg).value == v and solve_converse(cfg).value == v


def _five_case(cfg):
    try:
        return dof_piecewise_five_case(cfg) == dof_theorem1(cfg).value
    except ArithmeticError:
        return False


def _n1_special(cfg):
    return cfg.n1 != 1 or dof_theorem1(cfg).value == dof_theorem1_n1_special(cfg.m2, cfg.n2)


def _symmetric(cfg):
    if cfg.m1 != cfg.m2 or cfg.n1 != cfg.n2:
        return True
    return dof_theorem1(cfg).value == min(2 * cfg.m1, cfg.n1)


def _fd_dominates_hd(cfg):
    return dof_theorem1(cfg).value >= dof_hd_only(cfg)


def _two_fold(cfg):
    return dof_theorem1(cfg).value <= 2 * dof_hd_only(cfg)


def _model_order(cfg):
    return dof_theorem1(cfg).value <= dof_theorem2(FdConfig(cfg.m1, cfg.m2, cfg.n1 + cfg.n2))


def _si_penalty(cfg):
    return dof_self_interference(cfg) <= dof_theorem1(cfg).value


PROPERTIES = {
    "achievable = converse = closed form": _triple,
    "five-case = closed form": _five_case,
    "single DL user special case": _n1_special,
    "symmetric collapse min(2M,N)": _symmetric,
    "FD >= HD-only": _fd_dominates_hd,
    "FD <= 2 x HD-only": _two_fold,
    "HD users <= FD users": _model_order,
    "self-interference <= FD": _si_penalty,
}


@dataclass
class GridReport:
    bound: int
    configs: int = 0
    mismatches: dict[str, int] = field(default_factory=dict)
    first_counterexample: dict[str, HdSplitConfig] = field(default_factory=dict)
    si_below_hd: int = 0

    @property
    def total_mismatches(self) -> int:
        return sum(self.mismatches.values())


def check_grid(bound: int) -> GridReport:
    """Run every property over ``[1..bound]^4``.

    ``si_below_hd`` counts configs where the self-interference DoF is under
    the HD-only DoF; that ordering is not claimed, so it is not a mismatch.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    report = GridReport(bound, mismatches={name: 0 for name in PROPERTIES})
    for values in itertools.product(range(1, bound + 1), repeat=4):
        cfg = HdSplitConfig(*values)
        report.configs += 1
        for name, prop in PROPERTIES.items():
            if not prop(cfg):
                report.mismatches[name] += 1
                report.first_counterexample.setdefault(name, cfg)
        if dof_self_interference(cfg) < dof_hd_only(cfg):
            report.si_below_hd += 1
    return report
