"""Closed-form per-channel throughput bounds and their extrema.

All functions here are per channel; the L-channel total is linear in L
and the multiplier is applied only at the reporting layer.
"""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class BoundsPoint:
    lam: float
    q: int
    upper: float
    lower: float


def _check(lam, num_levels):
    if lam < 0:
        raise ValueError(f"traffic intensity must be >= 0, got {lam}")
    if num_levels < 1:
        raise ValueError(f"number of power levels must be >= 1, got {num_levels}")


def upper_bound(lam, num_levels):
    """Optimistic throughput: credits level q whenever levels 1..q are all
    collision-free, ignoring SINR failures from crowded lower levels.

    Evaluated as the explicit finite sum b * sum_{q<Q} (a+b)^q; the
    geometric closed form degenerates (0/0) as lam -> 0.
    """
    _check(lam, num_levels)
    x = lam / num_levels
    a = math.exp(-x)
    b = x * a
    s = 0.0
    t = 1.0
    for _ in range(num_levels):
        s += t
        t *= a + b
    return b * s


def lower_bound(lam, num_levels):
    """Pessimistic throughput: credits only all-singleton slots,
    lam * e^(-lam/Q) * ((1 + lam/Q) e^(-lam/Q))^(Q-1)."""
    _check(lam, num_levels)
    x = lam / num_levels
    return lam * math.exp(-x) * ((1.0 + x) * math.exp(-x)) ** (num_levels - 1)


def lower_bound_peak(num_levels):
    """(argmax, max) of the lower bound: the peak sits at lam = sqrt(Q)
    with value sqrt(Q) e^(-sqrt(Q)) (1 + 1/sqrt(Q))^(Q-1)."""
    _check(0.0, num_levels)
    r = math.sqrt(num_levels)
    w = r * math.exp(-r) * (1.0 + 1.0 / r) ** (num_levels - 1)
    return r, w


def asymptotic_peak(num_levels):
    """Large-Q approximation sqrt(Q) * e^(-1/sqrt(Q)) of the lower-bound
    peak.  Approximation only: it overshoots the exact peak value badly
    (factor ~1.6 at Q=100); the sqrt(Q) growth rate is what it gets right.
    """
    _check(0.0, num_levels)
    r = math.sqrt(num_levels)
    return r * math.exp(-1.0 / r)


def argmax_upper_bound(num_levels, tol=1e-6):
    """Traffic intensity maximizing the upper bound, by coarse grid scan
    over (0, 4*sqrt(Q)] then golden-section refinement to +-tol."""
    _check(0.0, num_levels)
    if tol <= 0:
        raise ValueError(f"tol must be > 0, got {tol}")
    hi = 4.0 * math.sqrt(num_levels)
    n_grid = 2048
    step = hi / n_grid
    best_i, best_v = 1, -1.0
    for i in range(1, n_grid + 1):
        v = upper_bound(i * step, num_levels)
        if v > best_v:
            best_i, best_v = i, v
    lo = max((best_i - 1) * step, step * 1e-6)
    up = min((best_i + 1) * step, hi)

    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = up - invphi * (up - lo)
    d = lo + invphi * (up - lo)
    fc = upper_bound(c, num_levels)
    fd = upper_bound(d, num_levels)
    while up - lo > tol:
        if fc > fd:
            up, d, fd = d, c, fc
            c = up - invphi * (up - lo)
            fc = upper_bound(c, num_levels)
        else:
            lo, c, fc = c, d, fd
            d = lo + invphi * (up - lo)
            fd = upper_bound(d, num_levels)
    return 0.5 * (lo + up)


def bounds_point(lam, num_levels):
    return BoundsPoint(lam, num_levels, upper_bound(lam, num_levels), lower_bound(lam, num_levels))
