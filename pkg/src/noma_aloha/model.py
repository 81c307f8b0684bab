"""System configuration and SIC power-ladder construction."""

import math
from dataclasses import dataclass

# Beyond this the top level's received power grows past anything a radio
# could transmit, and the ladder spans so many orders of magnitude that
# double-precision SINR arithmetic becomes meaningless.
Q_MAX = 40

LADDER_REL_TOL = 1e-9


class ConfigError(ValueError):
    """A configuration field violates its constraint."""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


@dataclass(frozen=True)
class SystemConfig:
    """Parameters of one NOMA-ALOHA system.

    num_channels: number of orthogonal channels L.
    num_levels: number of power levels Q.
    sinr_target: decoding SINR threshold, linear scale.
    traffic_intensity: mean active users per channel per slot (Poisson).
    """

    num_channels: int
    num_levels: int
    sinr_target: float
    traffic_intensity: float

    @property
    def total_traffic(self):
        return self.num_channels * self.traffic_intensity


@dataclass(frozen=True)
class PowerLadder:
    """Received-power levels v_1 > ... > v_Q, normalized to unit noise."""

    levels: tuple

    @property
    def num_levels(self):
        return len(self.levels)

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(float(v) for v in self.levels))


def gamma_db_to_linear(gamma_db):
    """Convert an SINR target from decibels to linear scale."""
    gamma_db = float(gamma_db)
    if not math.isfinite(gamma_db):
        raise ConfigError("gamma_db", "must be finite")
    return 10.0 ** (gamma_db / 10.0)


def build_power_ladder(gamma, num_levels):
    """Build the ladder v_q = gamma * (gamma + 1)^(Q - q), q = 1..Q.

    With one user per level, each level's SINR under SIC is exactly
    gamma: the residual interference below level q sums to v_q/gamma - 1.
    """
    if num_levels < 1:
        raise ConfigError("num_levels", "must be >= 1")
    if num_levels > Q_MAX:
        raise ConfigError(
            "num_levels",
            f"must be <= {Q_MAX}: the top level's power gamma*(gamma+1)^(Q-1) "
            "blows up exponentially and the ladder loses numerical structure",
        )
    gamma = float(gamma)
    if not (gamma > 0):
        raise ConfigError("sinr_target", "must be > 0")
    levels = tuple(gamma * (gamma + 1.0) ** (num_levels - q) for q in range(1, num_levels + 1))
    return PowerLadder(levels)


def validate_config(cfg):
    """Return cfg unchanged if every invariant holds, else raise ConfigError."""
    if cfg.num_channels < 1:
        raise ConfigError("num_channels", "must be >= 1")
    if cfg.num_levels < 1:
        raise ConfigError("num_levels", "must be >= 1")
    if cfg.num_levels > Q_MAX:
        raise ConfigError("num_levels", f"must be <= {Q_MAX}")
    if not (cfg.sinr_target > 0) or not math.isfinite(cfg.sinr_target):
        raise ConfigError("sinr_target", "must be a positive finite number")
    if cfg.traffic_intensity < 0 or not math.isfinite(cfg.traffic_intensity):
        raise ConfigError("traffic_intensity", "must be a non-negative finite number")
    return cfg
