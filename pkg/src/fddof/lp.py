"""Exact corner-point solvers for the two sum-DoF linear programs.

Achievable program, over stream loads ``(lam1, lam2)``::

    maximize  N1*lam1 + N2*lam2
    s.t.      lam1 + lam2 <= 1,  N1*lam1 <= M1,  N2*lam2 <= M2,  lam >= 0

Converse program, over direction sums ``(d_dl, d_ul)``::

    maximize  d_dl + d_ul
    s.t.      d_dl <= min(M1,N1),  d_ul <= min(M2,N2),
              N2*d_dl + N1*d_ul <= N1*N2,  d >= 0

Both feasible sets are polygons with at most five vertices, so the
optimum is found by evaluating an explicit candidate list exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .core import HdSplitConfig

Point = tuple[Fraction, Fraction]


class Program(str, Enum):
    ACHIEVABLE = "achievable"
    CONVERSE = "converse"


@dataclass(frozen=True)
class LoadPair:
    lambda1: Fraction
    lambda2: Fraction

    def as_tuple(self) -> Point:
        return (self.lambda1, self.lambda2)


@dataclass(frozen=True)
class LpSolution:
    """Optimum of one of the programs.

    ``argmax`` is a :class:`LoadPair` for the achievable program and a
    ``(d_dl_sum, d_ul_sum)`` tuple for the converse.
    """

    value: Fraction
    argmax: LoadPair | Point
    corner_count: int


def _require_users(cfg: HdSplitConfig) -> None:
    if cfg.n1 < 1 or cfg.n2 < 1:
        raise ValueError(f"both user counts must be at least 1, got {cfg}")


def achievable_feasible(cfg: HdSplitConfig, p: Point) -> bool:
    l1, l2 = p
    return (
        l1 >= 0
        and l2 >= 0
        and l1 + l2 <= 1
        and cfg.n1 * l1 <= cfg.m1
        and cfg.n2 * l2 <= cfg.m2
    )


def converse_feasible(cfg: HdSplitConfig, p: Point) -> bool:
    x, y = p
    return (
        x >= 0
        and y >= 0
        and x <= min(cfg.m1, cfg.n1)
        and y <= min(cfg.m2, cfg.n2)
        and cfg.n2 * x + cfg.n1 * y <= cfg.n1 * cfg.n2
    )


def achievable_objective(cfg: HdSplitConfig, p: Point) -> Fraction:
    return cfg.n1 * p[0] + cfg.n2 * p[1]


def converse_objective(cfg: HdSplitConfig, p: Point) -> Fraction:
    return p[0] + p[1]


def _achievable_candidates(cfg: HdSplitConfig) -> list[Point]:
    r1 = Fraction(cfg.m1, cfg.n1)
    r2 = Fraction(cfg.m2, cfg.n2)
    zero, one = Fraction(0), Fraction(1)
    return [
        (zero, zero),
        (min(one, r1), zero),
        (zero, min(one, r2)),
        (r1, r2),
        (r1, 1 - r1),
        (1 - r2, r2),
    ]


def _converse_candidates(cfg: HdSplitConfig) -> list[Point]:
    n1, n2 = cfg.n1, cfg.n2
    c1 = Fraction(min(cfg.m1, n1))
    c2 = Fraction(min(cfg.m2, n2))
    zero = Fraction(0)
    # Diagonal N2*x + N1*y = N1*N2 cut against each box edge.
    return [
        (zero, zero),
        (c1, zero),
        (zero, c2),
        (c1, c2),
        (c1, Fraction(n1 * n2 - n2 * c1, n1)),
        (Fraction(n1 * n2 - n1 * c2, n2), c2),
        (zero, Fraction(n2)),
        (Fraction(n1), zero),
    ]


_PROGRAMS = {
    Program.ACHIEVABLE: (_achievable_candidates, achievable_feasible, achievable_objective),
    Program.CONVERSE: (_converse_candidates, converse_feasible, converse_objective),
}


def enumerate_corners(cfg: HdSplitConfig, program: Program | str) -> list[Point]:
    """Vertices of the feasible polygon, each exactly once, in candidate order."""
    _require_users(cfg)
    candidates, feasible, _ = _PROGRAMS[Program(program)]
    seen: list[Point] = []
    for p in candidates(cfg):
        if feasible(cfg, p) and p not in seen:
            seen.append(p)
    return seen


def _solve(cfg: HdSplitConfig, program: Program) -> tuple[Fraction, Point, int]:
    _, _, objective = _PROGRAMS[program]
    corners = enumerate_corners(cfg, program)
    # Maximize objective, then prefer the lexicographically largest point.
    best = max(corners, key=lambda p: (objective(cfg, p), p))
    return objective(cfg, best), best, len(corners)


def solve_achievable(cfg: HdSplitConfig) -> LpSolution:
    """Maximum of ``N1*lam1 + N2*lam2`` over the stream-load polygon."""
    value, best, count = _solve(cfg, Program.ACHIEVABLE)
    return LpSolution(value, LoadPair(*best), count)


def solve_converse(cfg: HdSplitConfig) -> LpSolution:
    """Maximum of ``d_dl + d_ul`` over the upper-bound polygon."""
    value, best, count = _solve(cfg, Program.CONVERSE)
    return LpSolution(value, best, count)
