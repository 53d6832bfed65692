"""Finite-SNR rates of the alignment scheme and empirical DoF from their slope.

Receivers are zero-forcing. The DL user first projects onto the
orthogonal complement of the aligned interference, then inverts its
N2 - M2 streams; the BS inverts all M2*N2 UL streams jointly. With real
signalling a stream at post-processing SNR ``s`` carries
``0.5 * log2(1 + s)`` bits.

Power: a transmitter may spend ``p`` per slot on average, so over the
N2-slot block it has energy ``N2 * p``. The BS splits that equally over its
DL streams and every UL user over its M2 streams; beams have unit norm
across the block.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy import stats

from .closed_form import dof_theorem1_n1_special
from .core import ExtendedChannels, InvalidStateError, RngSeed
from .ia_n1 import (
    BeamformerSet,
    _check_regime,
    draw_trial,
    received_interference,
    received_ul,
    verify,
)

DEFAULT_POWERS = tuple(10.0**e for e in range(2, 11))


@dataclass(frozen=True)
class SlopeEstimate:
    slope: float
    intercept: float
    r_squared: float
    points: tuple[tuple[float, float], ...]

    def relative_error(self, target) -> float:
        target = float(target)
        return abs(self.slope - target) / target


def _unit_columns(a: np.ndarray) -> np.ndarray:
    return a / np.linalg.norm(a, axis=0)


def interference_nulling_basis(ch: ExtendedChannels, bf: BeamformerSet) -> np.ndarray:
    """Orthonormal basis (n2 x (n2-m2)) of the complement of the aligned interference."""
    if bf.m2 == 0:
        return np.eye(bf.n2)
    q, _ = np.linalg.qr(received_interference(ch, bf)[0], mode="complete")
    return q[:, bf.m2:]


def _zf_gains(a: np.ndarray) -> np.ndarray:
    # Post-ZF SNR per unit power of stream k is 1 / [(A^T A)^-1]_kk.
    gram_inv = np.linalg.inv(a.T @ a)
    return 1.0 / np.diag(gram_inv)


def stream_gains(ch: ExtendedChannels, bf: BeamformerSet) -> tuple[np.ndarray, np.ndarray]:
    """Post-ZF SNR per unit stream power: (DL streams, UL streams).

    Beams are normalized to unit norm before they hit the channel.
    """
    report = verify(ch, bf)
    if not report.ok:
        raise InvalidStateError(f"beamformers are rank deficient: {report}")
    if bf.dl_streams:
        basis = interference_nulling_basis(ch, bf)
        dl_eff = basis.T @ (ch.g_bar @ _unit_columns(bf.dl))
        dl_gain = _zf_gains(dl_eff)
    else:
        dl_gain = np.zeros(0)
    if bf.m2:
        ul_unit = bf.ul / np.linalg.norm(bf.ul, axis=1, keepdims=True)
        ul_gain = _zf_gains(received_ul(ch, BeamformerSet(bf.dl, ul_unit)))
    else:
        ul_gain = np.zeros(0)
    return dl_gain, ul_gain


def _rate(dl_gain: np.ndarray, ul_gain: np.ndarray, m2: int, n2: int, p: float) -> float:
    energy = n2 * p
    total = 0.0
    if dl_gain.size:
        total += 0.5 * np.log2(1.0 + (energy / dl_gain.size) * dl_gain).sum()
    if ul_gain.size:
        total += 0.5 * np.log2(1.0 + (energy / m2) * ul_gain).sum()
    return float(total / n2)


def sum_rate(ch: ExtendedChannels, bf: BeamformerSet, p: float) -> float:
    """Sum rate in bits per slot at transmit power ``p``.

    Raises
    ------
    InvalidStateError
        If the beamformers do not pass the rank checks.
    """
    if not p > 0:
        raise ValueError("power must be positive")
    return _rate(*stream_gains(ch, bf), bf.m2, bf.n2, p)


def _check_powers(powers) -> np.ndarray:
    powers = np.asarray(powers, dtype=float)
    if powers.ndim != 1 or powers.size < 3:
        raise ValueError("slope regression needs at least 3 power points")
    if np.any(powers <= 0) or np.any(np.diff(powers) <= 0):
        raise ValueError("powers must be positive and strictly increasing")
    ratios = powers[1:] / powers[:-1]
    if not np.allclose(ratios, ratios[0], rtol=1e-9):
        raise ValueError("powers must be geometrically spaced")
    if np.log10(powers[-1] / powers[0]) < 4 - 1e-9:
        raise ValueError("powers must span at least four decades")
    return powers


def estimate_dof_slope(
    m1: int,
    m2: int,
    n2: int,
    powers=DEFAULT_POWERS,
    seed: RngSeed = 0,
    trials: int = 20,
) -> SlopeEstimate:
    """Least-squares slope of the trial-averaged sum rate against ``0.5*log2(P)``.

    Channels and beamformers are drawn once per trial and reused across the
    whole power ladder.
    """
    powers = _check_powers(powers)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    _check_regime(m1, m2, n2)
    rates = np.zeros(powers.size)
    for i in range(trials):
        ch, bf = draw_trial(m1, m2, n2, seed, i)
        gains = stream_gains(ch, bf)
        rates += [_rate(*gains, m2, n2, p) for p in powers]
    rates /= trials
    x = 0.5 * np.log2(powers)
    fit = stats.linregress(x, rates)
    return SlopeEstimate(
        slope=float(fit.slope),
        intercept=float(fit.intercept),
        r_squared=float(fit.rvalue**2),
        points=tuple(zip(powers.tolist(), rates.tolist())),
    )


def expected_dof(m2: int, n2: int) -> Fraction:
    return dof_theorem1_n1_special(m2, n2)

