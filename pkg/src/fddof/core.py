"""Shared types for the full-duplex cellular DoF toolkit.

Holds the network configurations, exact rational helpers and the seeded
generator of symbol-extended channels used by the beamforming modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

Rational = Fraction
RngSeed = Union[int, np.integer]

_U64_MAX = 2**64 - 1


class UnsupportedRegimeError(ValueError):
    """Raised when a construction is asked to run outside its regime."""


class InvalidStateError(RuntimeError):
    """Raised when an object is not in a state that allows the operation."""


def _check_count(name: str, value: int) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")
    return int(value)


@dataclass(frozen=True)
class HdSplitConfig:
    """(M1, M2, N1, N2) network: FD base station, half-duplex users.

    ``m1`` transmit and ``m2`` receive antennas at the base station,
    ``n1`` single-antenna downlink users and ``n2`` uplink users.
    """

    m1: int
    m2: int
    n1: int
    n2: int

    def __post_init__(self):
        for name in ("m1", "m2", "n1", "n2"):
            object.__setattr__(self, name, _check_count(name, getattr(self, name)))

    @property
    def has_users(self) -> bool:
        return self.n1 > 0 or self.n2 > 0


@dataclass(frozen=True)
class FdConfig:
    """(M1, M2, N) network: FD base station, ``n`` full-duplex users."""

    m1: int
    m2: int
    n: int

    def __post_init__(self):
        for name in ("m1", "m2", "n"):
            object.__setattr__(self, name, _check_count(name, getattr(self, name)))


def rational(num: int, den: int = 1) -> Fraction:
    """Exact rational ``num/den`` in lowest terms.

    Thin wrapper over :class:`fractions.Fraction` that rejects a zero
    denominator with ``ValueError`` instead of ``ZeroDivisionError``.
    """
    if den == 0:
        raise ValueError("denominator must be nonzero")
    return Fraction(num, den)


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def format_rational(x: Fraction) -> str:
    """Render as ``p/q`` (always with the denominator)."""
    return f"{x.numerator}/{x.denominator}"


def format_decimal(x: Fraction, places: int = 6) -> str:
    """Fixed-point decimal string, rounded half-even, computed exactly."""
    scaled = round(x * 10**places)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    whole, frac = divmod(scaled, 10**places)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


def _check_seed(seed: RngSeed) -> int:
    seed = int(seed)
    if not 0 <= seed <= _U64_MAX:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return seed


def derive_seeds(seed: RngSeed, index: int, count: int = 2) -> list[int]:
    """Deterministic 64-bit sub-seeds for trial ``index`` of a run seeded by ``seed``."""
    ss = np.random.SeedSequence([_check_seed(seed), int(index)])
    return [int(s) for s in ss.generate_state(count, dtype=np.uint64)]


def _nonzero_normal(rng: np.random.Generator, shape) -> np.ndarray:
    x = rng.standard_normal(shape)
    # An exact zero has probability zero but would break the diagonal inverses.
    while True:
        zeros = x == 0.0
        if not zeros.any():
            return x
        x[zeros] = rng.standard_normal(int(zeros.sum()))


def _block_diag_rows(rows: np.ndarray) -> np.ndarray:
    """(T, M) per-slot row vectors -> T x (M*T) block-diagonal matrix."""
    t, m = rows.shape
    out = np.zeros((t, m * t))
    for s in range(t):
        out[s, s * m:(s + 1) * m] = rows[s]
    return out


def _block_diag_cols(cols: np.ndarray) -> np.ndarray:
    """(T, M) per-slot column vectors -> (M*T) x T block-diagonal matrix."""
    t, m = cols.shape
    out = np.zeros((m * t, t))
    for s in range(t):
        out[s * m:(s + 1) * m, s] = cols[s]
    return out


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class ExtendedChannels:
    """Block-diagonal channels of one DL user and ``n2`` UL users over ``t`` slots.

    Attributes
    ----------
    g : ndarray, shape (t, m1)
        Per-slot BS-to-DL-user row vectors.
    h : ndarray, shape (n2, t)
        Per-slot scalar gains from each UL user to the DL user.
    f : ndarray, shape (n2, t, m2)
        Per-slot UL-user-to-BS column vectors.

    The extended matrices ``g_bar`` (t x m1*t), ``h_bar`` (n2 x t x t)
    and ``f_bar`` (n2 x m2*t x t) are assembled from these at construction.
    """

    g: np.ndarray
    h: np.ndarray
    f: np.ndarray

    def __post_init__(self):
        g, h, f = (np.asarray(a, dtype=float) for a in (self.g, self.h, self.f))
        if g.ndim != 2 or h.ndim != 2 or f.ndim != 3:
            raise ValueError("expected g (t, m1), h (n2, t) and f (n2, t, m2)")
        t = g.shape[0]
        if t < 1 or h.shape[1] != t or f.shape[1] != t or f.shape[0] != h.shape[0]:
            raise ValueError(
                f"inconsistent shapes g{g.shape}, h{h.shape}, f{f.shape}"
            )
        if h.shape[0] < 1:
            raise ValueError("need at least one UL user")
        object.__setattr__(self, "g", _frozen(g))
        object.__setattr__(self, "h", _frozen(h))
        object.__setattr__(self, "f", _frozen(f))
        object.__setattr__(self, "g_bar", _frozen(_block_diag_rows(g)))
        object.__setattr__(
            self, "h_bar", _frozen(np.stack([np.diag(hj) for hj in h]))
        )
        object.__setattr__(
            self, "f_bar", _frozen(np.stack([_block_diag_cols(fj) for fj in f]))
        )

    @property
    def t(self) -> int:
        return self.g.shape[0]

    @property
    def m1(self) -> int:
        return self.g.shape[1]

    @property
    def m2(self) -> int:
        return self.f.shape[2]

    @property
    def n2(self) -> int:
        return self.h.shape[0]

    def equals(self, other: "ExtendedChannels") -> bool:
        return (
            np.array_equal(self.g, other.g)
            and np.array_equal(self.h, other.h)
            and np.array_equal(self.f, other.f)
        )


def gen_channels(m1: int, m2: int, n2: int, t: int, seed: RngSeed) -> ExtendedChannels:
    """Draw i.i.d. standard normal channels over a ``t``-slot symbol extension.

    Every per-slot coefficient is independent across slots and users, and
    exact zeros are redrawn. The draw order (g, then h, then f) is fixed so
    equal seeds give bit-identical channels.
    """
    m1, m2 = _check_count("m1", m1), _check_count("m2", m2)
    n2, t = _check_count("n2", n2), _check_count("t", t)
    if t < 1:
        raise ValueError("extension length t must be at least 1")
    if n2 < 1:
        raise ValueError("need at least one UL user (n2 >= 1)")
    rng = np.random.default_rng(_check_seed(seed))
    g = _nonzero_normal(rng, (t, m1))
    h = _nonzero_normal(rng, (n2, t))
    f = _nonzero_normal(rng, (n2, t, m2))
    return ExtendedChannels(g, h, f)
