from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fddof.closed_form import dof_theorem1_n1_special
from fddof.core import ExtendedChannels, UnsupportedRegimeError, gen_channels
from fddof.ia_n1 import (
    BeamformerSet,
    PureUplinkRegime,
    build_beamformers,
    draw_trial,
    monte_carlo,
    numeric_rank,
    received_interference,
    verify,
)


def test_alignment_is_entrywise_rescaling():
    ch = gen_channels(2, 2, 3, 3, seed=7)
    bf = build_beamformers(ch, 2, 2, seed=7)
    np.testing.assert_allclose(bf.ul[1][:, 0], ch.h[0] / ch.h[1] * bf.ul[0][:, 0], rtol=0, atol=0)


def test_beam_counts_for_2_2_4():
    ch = gen_channels(2, 2, 4, 4, seed=7)
    bf = build_beamformers(ch, 2, 2, seed=7)
    assert bf.dl.shape == (8, 2)
    assert bf.ul.shape == (4, 4, 2)
    assert bf.ul_streams == 8 and bf.dl_streams == 2
    assert bf.symbols_per_slot == Fraction(5, 2) == dof_theorem1_n1_special(2, 4)


def test_verify_random_2_2_4():
    ch = gen_channels(2, 2, 4, 4, seed=11)
    r = verify(ch, build_beamformers(ch, 2, 2, seed=12))
    assert r.alignment_residual <= 1e-9
    assert (r.interference_rank, r.dl_rank, r.bs_rank) == (2, 4, 8)
    assert r.passed(1e-9)


def test_identical_channels_align_exactly():
    n2, m1, m2 = 3, 1, 2
    rng = np.random.default_rng(0)
    ch = ExtendedChannels(
        rng.standard_normal((n2, m1)), np.ones((n2, n2)), rng.standard_normal((n2, n2, m2))
    )
    bf = build_beamformers(ch, m1, m2, seed=0)
    for j in range(n2):
        np.testing.assert_array_equal(bf.ul[j], bf.ul[0])
    assert verify(ch, bf).alignment_residual == 0.0


def test_square_boundary_has_no_dl_beams():
    ch, bf = draw_trial(1, 3, 3, seed=0, index=0)
    assert bf.dl.shape == (3, 0)
    r = verify(ch, bf)
    assert r.dl_rank == 3
    assert r.symbols_per_slot == 3


def test_pure_uplink_regime():
    ch = gen_channels(1, 5, 3, 3, seed=0)
    with pytest.raises(PureUplinkRegime) as info:
        build_beamformers(ch, 1, 5)
    assert isinstance(info.value, UnsupportedRegimeError)
    assert info.value.scheme.symbols_per_slot == 3
    with pytest.raises(UnsupportedRegimeError):
        monte_carlo(1, 5, 3, trials=2)


def test_build_rejects_wrong_extension():
    ch = gen_channels(2, 1, 3, 2, seed=0)
    with pytest.raises(ValueError):
        build_beamformers(ch, 2, 1)


def test_build_is_deterministic():
    ch = gen_channels(2, 2, 4, 4, seed=3)
    a, b = build_beamformers(ch, 2, 2, seed=9), build_beamformers(ch, 2, 2, seed=9)
    np.testing.assert_array_equal(a.dl, b.dl)
    np.testing.assert_array_equal(a.ul, b.ul)


def test_monte_carlo_2_2_4():
    r = monte_carlo(2, 2, 4, trials=100, seed=1, tol=1e-9)
    assert r.failures == 0
    assert r.max_residual <= 1e-9
    assert r.symbols_per_slot == Fraction(5, 2)


def test_monte_carlo_square_boundary():
    r = monte_carlo(1, 3, 3, trials=50, seed=0)
    assert r.failures == 0
    assert r.symbols_per_slot == 3


def test_monte_carlo_rejects_zero_trials():
    with pytest.raises(ValueError):
        monte_carlo(2, 2, 4, trials=0)


def test_trials_depend_only_on_seed_and_index():
    ch_a, bf_a = draw_trial(2, 1, 3, seed=5, index=4)
    monte_carlo(2, 1, 3, trials=3, seed=5)
    ch_b, bf_b = draw_trial(2, 1, 3, seed=5, index=4)
    assert ch_a.equals(ch_b)
    np.testing.assert_array_equal(bf_a.ul, bf_b.ul)


@settings(max_examples=40, deadline=None)
@given(
    m1=st.integers(1, 4),
    mn=st.tuples(st.integers(0, 6), st.integers(1, 6)).filter(lambda t: t[0] <= t[1]),
    seed=st.integers(0, 2**32),
)
def test_construction_properties(m1, mn, seed):
    m2, n2 = mn
    ch, bf = draw_trial(m1, m2, n2, seed, 0)
    r = verify(ch, bf)
    assert r.alignment_residual <= 1e-12
    assert r.interference_rank <= m2 and r.dl_rank <= n2 and r.bs_rank <= m2 * n2
    assert r.symbols_per_slot == dof_theorem1_n1_special(m2, n2)
    # every user's interference coincides with user 1's
    interf = received_interference(ch, bf)
    np.testing.assert_allclose(interf, np.broadcast_to(interf[0], interf.shape), rtol=1e-12, atol=0)


def test_numeric_rank_basics():
    assert numeric_rank(np.zeros((3, 0))) == 0
    assert numeric_rank(np.eye(4)) == 4
    a = np.array([[1.0, 2.0], [2.0, 4.0]])
    assert numeric_rank(a) == 1
    # widely different column scales do not hide independence
    assert numeric_rank(np.diag([1.0, 1e-14])) == 2


def test_beamformer_set_properties():
    bf = BeamformerSet(np.zeros((6, 1)), np.zeros((3, 3, 2)))
    assert (bf.n2, bf.m2, bf.dl_streams, bf.ul_streams) == (3, 2, 1, 6)
    assert bf.symbols_per_slot == Fraction(7, 3)
