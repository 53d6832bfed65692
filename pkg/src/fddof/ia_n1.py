"""Interference-alignment beamforming for the (M1, M2, 1, N2) network.

Over an N2-slot symbol extension the BS sends N2 - M2 streams to the
single DL user while every UL user sends M2 streams. The UL beams are
built so that, at the DL user, the k-th stream of every UL user lands on
the same direction::

    H_1j v_jk = H_11 v_1k   for all j, k

which squeezes all inter-user interference into M2 of the N2 receive
dimensions and leaves N2 - M2 interference-free dimensions for the DL.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .core import (
    ExtendedChannels,
    RngSeed,
    UnsupportedRegimeError,
    derive_seeds,
    gen_channels,
)

log = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class PureUplinkScheme:
    """Scheme used when M2 >= N2: the BS just receives all N2 UL users."""

    m2: int
    n2: int

    @property
    def symbols_per_slot(self) -> Fraction:
        return Fraction(self.n2)


class PureUplinkRegime(UnsupportedRegimeError):
    """M2 > N2: no alignment structure, use :class:`PureUplinkScheme` instead."""

    def __init__(self, m2: int, n2: int):
        self.scheme = PureUplinkScheme(m2, n2)
        super().__init__("unsupported regime: M2 > N2 uses pure UL reception")


@dataclass(frozen=True, eq=False)
class BeamformerSet:
    """Time-extended beamformers of the single-DL-user alignment scheme.

    Attributes
    ----------
    dl : ndarray, shape (m1*n2, n2-m2)
        DL beamforming vectors, one per column.
    ul : ndarray, shape (n2, n2, m2)
        ``ul[j]`` holds the M2 beams of UL user ``j`` as columns.
    """

    dl: np.ndarray
    ul: np.ndarray

    @property
    def n2(self) -> int:
        return self.ul.shape[0]

    @property
    def m2(self) -> int:
        return self.ul.shape[2]

    @property
    def dl_streams(self) -> int:
        return self.dl.shape[1]

    @property
    def ul_streams(self) -> int:
        return self.ul.shape[0] * self.ul.shape[2]

    @property
    def symbols_per_slot(self) -> Fraction:
        return Fraction(self.dl_streams + self.ul_streams, self.n2)


@dataclass(frozen=True)
class VerificationReport:
    alignment_residual: float
    interference_rank: int
    dl_rank: int
    bs_rank: int
    symbols_per_slot: Fraction
    n2: int
    m2: int

    @property
    def ok(self) -> bool:
        return (
            self.interference_rank == self.m2
            and self.dl_rank == self.n2
            and self.bs_rank == self.m2 * self.n2
        )

    def passed(self, tol: float) -> bool:
        return self.ok and self.alignment_residual <= tol


@dataclass
class MonteCarloReport:
    m1: int
    m2: int
    n2: int
    trials: int
    tol: float
    max_residual: float = 0.0
    min_interference_rank: int | None = None
    min_dl_rank: int | None = None
    min_bs_rank: int | None = None
    failures: int = 0
    failed_trials: list[int] = field(default_factory=list)

    @property
    def symbols_per_slot(self) -> Fraction:
        return Fraction(self.n2 - self.m2 + self.m2 * self.n2, self.n2)


def _check_regime(m1: int, m2: int, n2: int) -> None:
    if m1 < 1:
        raise ValueError("the BS needs at least one transmit antenna (m1 >= 1)")
    if n2 < 1:
        raise ValueError("need at least one UL user (n2 >= 1)")
    if m2 > n2:
        raise PureUplinkRegime(m2, n2)


def build_beamformers(
    ch: ExtendedChannels, m1: int, m2: int, seed: RngSeed = 0
) -> BeamformerSet:
    """Random DL beams plus aligned UL beams for the channels ``ch``.

    ``ch`` must span ``t = n2`` slots. DL beams and the beams of UL user 1
    are i.i.d. standard normal; UL user ``j`` uses
    ``v_jk = (H_1j)^-1 H_11 v_1k``, an entrywise rescaling because the
    extended user-to-user channels are diagonal. Columns are left
    unnormalized so the alignment holds exactly, not just up to scale.

    Raises
    ------
    PureUplinkRegime
        If ``m2 > n2``.
    """
    n2 = ch.n2
    _check_regime(m1, m2, n2)
    if ch.t != n2:
        raise ValueError(f"alignment needs an extension of t = n2 = {n2} slots, got {ch.t}")
    if ch.m1 != m1 or ch.m2 != m2:
        raise ValueError(
            f"channels were drawn for m1={ch.m1}, m2={ch.m2}, not m1={m1}, m2={m2}"
        )
    rng = np.random.default_rng(seed)
    dl = rng.standard_normal((m1 * n2, n2 - m2))
    ul1 = rng.standard_normal((n2, m2))
    ratio = ch.h[0][None, :] / ch.h  # (n2 users, n2 slots)
    ul = ratio[:, :, None] * ul1[None, :, :]
    ul[0] = ul1
    dl.setflags(write=False)
    ul.setflags(write=False)
    return BeamformerSet(dl, ul)


def numeric_rank(a: np.ndarray, tol: float = DEFAULT_TOL) -> int:
    """Rank with singular values below ``tol * s_max`` treated as zero.

    Columns are scaled to unit norm first, which leaves the rank unchanged
    but keeps widely different beam gains from masking independence.
    """
    if a.size == 0:
        return 0
    norms = np.linalg.norm(a, axis=0)
    a = a[:, norms > 0] / norms[norms > 0]
    if a.shape[1] == 0:
        return 0
    s = np.linalg.svd(a, compute_uv=False)
    return int(np.sum(s > tol * s[0]))


def received_dl(ch: ExtendedChannels, bf: BeamformerSet) -> np.ndarray:
    """DL beams as seen by the DL user, shape (n2, n2-m2)."""
    return ch.g_bar @ bf.dl


def received_interference(ch: ExtendedChannels, bf: BeamformerSet) -> np.ndarray:
    """``H_1j v_jk`` for all users, shape (n2 users, n2, m2)."""
    return ch.h[:, :, None] * bf.ul


def received_ul(ch: ExtendedChannels, bf: BeamformerSet) -> np.ndarray:
    """Stacked ``F_j v_jk`` at the BS, shape (m2*n2, n2*m2), columns ordered (j, k)."""
    # F_j is block diagonal with f_j(t) in slot t.
    cols = ch.f[:, :, :, None] * bf.ul[:, :, None, :]  # (j, t, m2 rx, k)
    n2, t, m2, k = cols.shape
    return cols.reshape(n2, t * m2, k).transpose(1, 0, 2).reshape(t * m2, n2 * k)


def verify(ch: ExtendedChannels, bf: BeamformerSet, tol: float = DEFAULT_TOL) -> VerificationReport:
    """Check the alignment condition and the decodability ranks.

    The alignment residual is the largest ``||H_1j v_jk - H_11 v_1k||``
    relative to ``||H_11 v_1k||``.
    """
    if bf.n2 != ch.n2 or ch.t != bf.n2 or bf.m2 != ch.m2:
        raise ValueError("beamformers and channels have inconsistent shapes")
    n2, m2 = bf.n2, bf.m2
    interference = received_interference(ch, bf)
    reference = interference[0]
    if m2:
        scale = np.linalg.norm(reference, axis=0)
        scale[scale == 0] = 1.0
        diff = np.linalg.norm(interference - reference[None], axis=1) / scale[None]
        residual = float(diff.max())
    else:
        residual = 0.0
    dl_matrix = np.hstack([received_dl(ch, bf), reference])
    return VerificationReport(
        alignment_residual=residual,
        interference_rank=numeric_rank(reference, tol),
        dl_rank=numeric_rank(dl_matrix, tol),
        bs_rank=numeric_rank(received_ul(ch, bf), tol),
        symbols_per_slot=Fraction(n2 - m2 + m2 * n2, n2),
        n2=n2,
        m2=m2,
    )


def draw_trial(m1: int, m2: int, n2: int, seed: RngSeed, index: int):
    """Channels and beamformers of trial ``index``; depends only on (seed, index)."""
    ch_seed, bf_seed = derive_seeds(seed, index)
    ch = gen_channels(m1, m2, n2, n2, ch_seed)
    return ch, build_beamformers(ch, m1, m2, bf_seed)


def monte_carlo(
    m1: int, m2: int, n2: int, trials: int, seed: RngSeed = 0, tol: float = DEFAULT_TOL
) -> MonteCarloReport:
    """Run ``trials`` independent constructions and collect worst-case statistics.

    A trial fails if its alignment residual exceeds ``tol`` or any rank
    falls short. Failures are logged, never retried.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    _check_regime(m1, m2, n2)
    report = MonteCarloReport(m1, m2, n2, trials, tol)
    for i in range(trials):
        ch, bf = draw_trial(m1, m2, n2, seed, i)
        r = verify(ch, bf, tol)
        report.max_residual = max(report.max_residual, r.alignment_residual)
        report.min_interference_rank = _min(report.min_interference_rank, r.interference_rank)
        report.min_dl_rank = _min(report.min_dl_rank, r.dl_rank)
        report.min_bs_rank = _min(report.min_bs_rank, r.bs_rank)
        if not r.passed(tol):
            report.failures += 1
            report.failed_trials.append(i)
            log.warning("trial %d failed for (m1=%d, m2=%d, n2=%d): %s", i, m1, m2, n2, r)
    return report


def _min(a: int | None, b: int) -> int:
    return b if a is None else min(a, b)
