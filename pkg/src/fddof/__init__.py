"""Sum degrees of freedom of full-duplex multiantenna cellular networks.

Closed forms, exact linear-program cross-checks, the single-DL-user
interference-alignment construction and its finite-SNR rate slope.
"""

from .closed_form import (
    DofBreakdown,
    dof_hd_only,
    dof_piecewise_five_case,
    dof_self_interference,
    dof_theorem1,
    dof_theorem1_n1_special,
    dof_theorem2,
    sahai_region_contains,
)
from .core import (
    ExtendedChannels,
    FdConfig,
    HdSplitConfig,
    InvalidStateError,
    UnsupportedRegimeError,
    format_decimal,
    format_rational,
    gen_channels,
    rational,
)
from .ia_n1 import BeamformerSet, PureUplinkScheme, build_beamformers, monte_carlo, verify
from .lp import enumerate_corners, solve_achievable, solve_converse
from .rate_sim import SlopeEstimate, estimate_dof_slope, expected_dof, sum_rate
from .scheduler import Mode, SplitResult, optimal_split, saturation_threshold, split_curve

__version__ = "0.1.0"
