"""Closed-form sum DoF of full-duplex cellular networks, in exact rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import FdConfig, HdSplitConfig, as_rational

TERM_ANTENNAS = "M1+M2"
TERM_USERS = "max(N1,N2)"
TERM_ALIGNMENT = "max(a1,a2)"
TERM_DL_ONLY = "min(M1,N1)"
TERM_UL_ONLY = "min(M2,N2)"
TERM_NO_USERS = "no users"


@dataclass(frozen=True)
class DofBreakdown:
    """Sum DoF together with the term of the min that attains it."""

    value: Fraction
    binding_term: str
    terms: tuple[tuple[str, Fraction], ...] = ()


def _pos(x: Fraction) -> Fraction:
    return x if x > 0 else Fraction(0)


def alignment_terms(cfg: HdSplitConfig) -> tuple[Fraction, Fraction]:
    """``(a1, a2)`` with a1 = M1 + N2(N1-M1)/N1 and a2 = M2 + N1(N2-M2)/N2."""
    m1, m2, n1, n2 = cfg.m1, cfg.m2, cfg.n1, cfg.n2
    a1 = m1 + Fraction(n2 * (n1 - m1), n1)
    a2 = m2 + Fraction(n1 * (n2 - m2), n2)
    return a1, a2


def _degenerate(cfg: HdSplitConfig) -> DofBreakdown | None:
    # Zero users on one side: the ratio terms are undefined, the network
    # reduces to a point-to-point MIMO link in the other direction.
    if cfg.n1 and cfg.n2:
        return None
    if not cfg.has_users:
        return DofBreakdown(Fraction(0), TERM_NO_USERS)
    if cfg.n1 == 0:
        return DofBreakdown(Fraction(min(cfg.m2, cfg.n2)), TERM_UL_ONLY)
    return DofBreakdown(Fraction(min(cfg.m1, cfg.n1)), TERM_DL_ONLY)


def dof_theorem1(cfg: HdSplitConfig) -> DofBreakdown:
    """Sum DoF of the (M1, M2, N1, N2) FD-BS / HD-user network.

    ``min{M1+M2, max(N1,N2), max(a1,a2)}``. Ties in the binding term go to
    the earliest of the three. With no users on one side the value falls
    back to the single-direction MIMO DoF.
    """
    degenerate = _degenerate(cfg)
    if degenerate is not None:
        return degenerate
    terms = (
        (TERM_ANTENNAS, Fraction(cfg.m1 + cfg.m2)),
        (TERM_USERS, Fraction(max(cfg.n1, cfg.n2))),
        (TERM_ALIGNMENT, max(alignment_terms(cfg))),
    )
    value = min(v for _, v in terms)
    binding = next(name for name, v in terms if v == value)
    return DofBreakdown(value, binding, terms)


def dof_theorem1_n1_special(m2: int, n2: int) -> Fraction:
    """Sum DoF with a single DL user: ``N2`` if M2 >= N2, else ``M2 + (N2-M2)/N2``."""
    if n2 < 1:
        raise ValueError("n2 must be at least 1")
    if m2 >= n2:
        return Fraction(n2)
    return m2 + Fraction(n2 - m2, n2)


def five_case_values(cfg: HdSplitConfig) -> dict[str, Fraction]:
    """Value of every case of the piecewise LP solution whose guard ``cfg`` meets.

    Keys are the case labels ``"I"`` .. ``"V"``. Boundary configurations
    satisfy several guards at once.
    """
    m1, m2, n1, n2 = cfg.m1, cfg.m2, cfg.n1, cfg.n2
    if n1 < 1 or n2 < 1:
        raise ValueError("piecewise cases need n1 >= 1 and n2 >= 1")
    a1, a2 = alignment_terms(cfg)
    cross = m1 * n2 + m2 * n1
    out: dict[str, Fraction] = {}
    if m1 >= n1 and m2 >= n2:
        out["I"] = Fraction(max(n1, n2))
    if m1 <= n1 and m2 >= n2:
        out["II"] = max(Fraction(n2), a1)
    if m1 >= n1 and m2 <= n2:
        out["III"] = max(Fraction(n1), a2)
    if m1 <= n1 and m2 <= n2 and cross >= n1 * n2:
        out["IV"] = max(a1, a2)
    if m1 <= n1 and m2 <= n2 and cross <= n1 * n2:
        out["V"] = Fraction(m1 + m2)
    return out


def dof_piecewise_five_case(cfg: HdSplitConfig) -> Fraction:
    """Sum DoF from the five-case piecewise form.

    Evaluates the first matching case. Raises ``ArithmeticError`` if two
    matching cases disagree, which would contradict their equivalence.
    """
    degenerate = _degenerate(cfg)
    if degenerate is not None:
        return degenerate.value
    values = five_case_values(cfg)
    distinct = set(values.values())
    if len(distinct) != 1:
        raise ArithmeticError(f"matching cases disagree for {cfg}: {values}")
    return next(iter(values.values()))


def dof_theorem2(cfg: FdConfig) -> Fraction:
    """Sum DoF of the (M1, M2, N) FD-BS / FD-user network: ``min(M1+M2, N)``."""
    return Fraction(min(cfg.m1 + cfg.m2, cfg.n))


def self_interference_terms(cfg: HdSplitConfig) -> tuple[Fraction, ...]:
    m1, m2, n1, n2 = cfg.m1, cfg.m2, cfg.n1, cfg.n2
    nmax = max(n1, n2)
    first = Fraction(
        n1 * n2
        + min(m1, n1) * _pos(Fraction(n1 - n2))
        + min(m2, n2) * _pos(Fraction(n2 - n1)),
        nmax,
    )
    return (
        first,
        Fraction(m1 + n2),
        Fraction(m2 + n1),
        Fraction(max(m1, m2)),
        Fraction(nmax),
    )


def dof_self_interference(cfg: HdSplitConfig) -> Fraction:
    """Sum DoF when the BS suffers unsuppressed self-interference.

    Minimum of five terms, the first being
    ``(N1 N2 + min(M1,N1)(N1-N2)^+ + min(M2,N2)(N2-N1)^+) / max(N1,N2)``.
    The formula stays well defined with users on one side only; with no
    users at all the value is 0.
    """
    if not cfg.has_users:
        return Fraction(0)
    return min(self_interference_terms(cfg))


def dof_hd_only(cfg: HdSplitConfig) -> Fraction:
    """Sum DoF when the BS serves only one direction: ``max(min(M1,N1), min(M2,N2))``."""
    return Fraction(max(min(cfg.m1, cfg.n1), min(cfg.m2, cfg.n2)))


def sahai_region_contains(m: int, n: int, d_dl_sum, d_ul_sum) -> bool:
    """Membership in the symmetric (M, M, N) DoF region reported for ergodic phase fading."""
    d_dl, d_ul = as_rational(d_dl_sum), as_rational(d_ul_sum)
    if d_dl < 0 or d_ul < 0:
        raise ValueError("DoF values must be nonnegative")
    per_direction = min(m, n)
    return d_dl <= per_direction and d_ul <= per_direction and d_dl + d_ul <= min(2 * m, n)


def self_interference_below_hd(bound: int) -> list[HdSplitConfig]:
    """Configs in ``[1..bound]^4`` where the self-interference DoF is below the HD-only DoF.

    No ordering between the two is claimed in general, so this only reports.
    """
    rng = range(1, bound + 1)
    return [
        cfg
        for cfg in (HdSplitConfig(a, b, c, d) for a in rng for b in rng for c in rng for d in rng)
        if dof_self_interference(cfg) < dof_hd_only(cfg)
    ]
