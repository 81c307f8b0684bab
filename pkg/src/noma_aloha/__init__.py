"""NOMA-ALOHA throughput toolkit.

Power-domain NOMA over multichannel slotted ALOHA: SIC power ladders,
per-slot decoding, closed-form throughput bounds, an exact enumeration
oracle, and a seeded Monte Carlo simulator.
"""

from ._kernel import BACKEND as KERNEL_BACKEND
from ._kernel import RNG_NAME
from .bounds import (
    BoundsPoint,
    argmax_upper_bound,
    asymptotic_peak,
    bounds_point,
    lower_bound,
    lower_bound_peak,
    upper_bound,
)
from .model import (
    Q_MAX,
    ConfigError,
    PowerLadder,
    SystemConfig,
    build_power_ladder,
    gamma_db_to_linear,
    validate_config,
)
from .montecarlo import ThroughputEstimate, sample_outcome, simulate, subsequence_seed, sweep
from .oracle import OracleResult, exact_throughput, truncation_level
from .sic import (
    DecodeResult,
    Decoder,
    Status,
    decode_count,
    decode_count_paper,
    decode_count_strict,
    is_all_singleton,
    last_collision_free_level,
    sinr_at_level,
)

__version__ = "0.1.0"
