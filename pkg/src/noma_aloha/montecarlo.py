"""Seeded Monte Carlo throughput estimation.

Slots are embarrassingly parallel: every slot's randomness is a pure
function of (seed, slot_index), slots are processed in fixed-size chunks,
and chunk histograms are merged by integer addition.  The estimate is
therefore bit-identical regardless of chunking or worker count.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import _kernel, _kernel_py
from ._kernel_py import mix64 as _mix64
from .bounds import bounds_point
from .model import build_power_ladder, validate_config
from .sic import SINR_REL_SLACK, Decoder

CHUNK_SLOTS = 1 << 16


@dataclass(frozen=True)
class ThroughputEstimate:
    """Per-channel decoded-signals-per-slot estimate."""

    mean: float
    std_error: float
    num_slots: int
    seed: int
    decoder: Decoder
    histogram: tuple  # histogram[k] = slots with exactly k decoded signals


@dataclass(frozen=True)
class SweepPoint:
    value: float
    estimate: ThroughputEstimate
    bounds: object
    error: str = None


def sample_outcome(seed, slot_index, per_level_mean, num_levels):
    """The outcome vector the simulation would draw for this slot."""
    if per_level_mean < 0:
        raise ValueError("per-level mean must be >= 0")
    pmf0 = math.exp(-per_level_mean)
    return tuple(_kernel_py.draw_counts(seed, slot_index, num_levels, per_level_mean, pmf0))


def _estimate_from_hist(hist, num_slots, seed, decoder):
    total = 0
    total_sq = 0
    for k, n_k in enumerate(hist):
        total += k * n_k
        total_sq += k * k * n_k
    mean = total / num_slots
    if num_slots > 1:
        var = (total_sq - num_slots * mean * mean) / (num_slots - 1)
        var = max(var, 0.0)
    else:
        var = 0.0
    se = math.sqrt(var / num_slots)
    return ThroughputEstimate(mean, se, num_slots, seed, Decoder(decoder), tuple(int(x) for x in hist))


def simulate(cfg, num_slots, seed, decoder=Decoder.PAPER, workers=None):
    """Estimate per-channel throughput over num_slots independent slots.

    Bit-identical output for identical (cfg, num_slots, seed, decoder),
    whatever `workers` is.
    """
    validate_config(cfg)
    if num_slots < 1:
        raise ValueError("num_slots must be >= 1")
    decoder = Decoder(decoder)
    q = cfg.num_levels
    ladder = build_power_ladder(cfg.sinr_target, q)
    mu = cfg.traffic_intensity / q
    pmf0 = math.exp(-mu)
    thr = cfg.sinr_target * (1.0 - SINR_REL_SLACK)
    strict = decoder is Decoder.STRICT
    levels = list(ladder.levels)

    starts = range(0, num_slots, CHUNK_SLOTS)

    def chunk(start):
        n = min(CHUNK_SLOTS, num_slots - start)
        return _kernel.run_slots(seed, start, n, mu, pmf0, levels, thr, strict)

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hists = list(pool.map(chunk, starts))
    else:
        hists = [chunk(s) for s in starts]

    hist = [0] * (q + 1)
    for h in hists:
        for k in range(q + 1):
            hist[k] += int(h[k])
    return _estimate_from_hist(hist, num_slots, seed, decoder)


def subsequence_seed(seed, index):
    """Derived seed for sweep point `index` (fixed 64-bit mixing)."""
    return _mix64(_mix64(seed) ^ (index + 1))


def sweep(cfg, axis, values, num_slots, seed, decoder=Decoder.PAPER, workers=None):
    """Run simulate() across a list of lambda or Q values.

    Each point gets its own derived sub-seed; a failing point is reported
    in place and the sweep continues.
    """
    if axis not in ("lambda", "q"):
        raise ValueError(f"axis must be 'lambda' or 'q', got {axis!r}")
    if not values:
        raise ValueError("values must be non-empty")
    out = []
    for i, val in enumerate(values):
        sub_seed = subsequence_seed(seed, i)
        try:
            if axis == "lambda":
                point_cfg = type(cfg)(cfg.num_channels, cfg.num_levels, cfg.sinr_target, val)
            else:
                point_cfg = type(cfg)(cfg.num_channels, int(val), cfg.sinr_target, cfg.traffic_intensity)
            est = simulate(point_cfg, num_slots, sub_seed, decoder, workers)
            bp = bounds_point(point_cfg.traffic_intensity, point_cfg.num_levels)
            out.append(SweepPoint(val, est, bp))
        except (ValueError, ArithmeticError) as exc:
            out.append(SweepPoint(val, None, None, error=str(exc)))
    return out
