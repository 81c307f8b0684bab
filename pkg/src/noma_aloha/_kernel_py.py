"""Pure-Python slot-simulation kernel.

Reference implementation of the hot loop; `noma_aloha._kernel_cy` is the
compiled twin.  Both must produce bit-identical histograms for the same
arguments: every floating-point operation here is written in the same
order as in the .pyx file, and the RNG is shared.

RNG ("splitmix64-counter-v1"): each slot owns an independent stream
keyed by  slot_seed = mix64(seed ^ mix64(slot_index + 1)) ; draw j of a
slot is  mix64(slot_seed + j * GOLDEN) .  Randomness is a pure function
of (seed, slot_index, draw_index), which is what makes the result
independent of chunking and worker count.
"""

import numpy as np

_MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_POISSON_CAP = 350
_INV_2POW53 = 1.0 / 9007199254740992.0


def mix64(z):
    """splitmix64 finalizer (Stafford mix13)."""
    z &= _MASK
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & _MASK
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & _MASK
    z ^= z >> 31
    return z


def _slot_seed(seed, slot_index):
    return mix64(seed ^ mix64((slot_index + 1) & _MASK))


def _u01(x):
    return (x >> 11) * _INV_2POW53


def draw_counts(seed, slot_index, num_levels, mu, pmf0):
    """Poisson(mu) count per level for one slot, by CDF inversion."""
    s = _slot_seed(seed, slot_index)
    counts = []
    j = 0
    for _ in range(num_levels):
        j += 1
        u = _u01(mix64((s + j * GOLDEN) & _MASK))
        p = pmf0
        cdf = p
        k = 0
        while u >= cdf and k < _POISSON_CAP:
            k += 1
            p = p * (mu / k)
            cdf = cdf + p
        counts.append(k)
    return counts


def run_slots(seed, slot_start, n_slots, mu, pmf0, levels, thr, strict):
    """Simulate n_slots channel-slots; return the int64 histogram of
    decoded counts (length Q+1)."""
    levels = [float(v) for v in levels]
    num_levels = len(levels)
    hist = [0] * (num_levels + 1)
    for i in range(n_slots):
        counts = draw_counts(seed, slot_start + i, num_levels, mu, pmf0)

        qbar = num_levels
        for q in range(num_levels):
            if counts[q] >= 2:
                qbar = q
                break

        interf = [0.0] * num_levels
        acc = 0.0
        for q in range(num_levels - 1, -1, -1):
            interf[q] = acc
            acc += counts[q] * levels[q]

        decoded = 0
        extra = 0.0
        for q in range(qbar):
            if counts[q] == 1:
                if levels[q] >= thr * (interf[q] + extra + 1.0):
                    decoded += 1
                elif strict:
                    extra += levels[q]
        hist[decoded] += 1
    return np.asarray(hist, dtype=np.int64)


def sample_stats(seed, slot_start, n_slots, num_levels, mu, pmf0):
    """Aggregate the raw per-level draws over n_slots: (sum of counts,
    number of zeros) per level.  Used to validate the sampler itself."""
    sums = [0] * num_levels
    zeros = [0] * num_levels
    for i in range(n_slots):
        counts = draw_counts(seed, slot_start + i, num_levels, mu, pmf0)
        for q in range(num_levels):
            sums[q] += counts[q]
            if counts[q] == 0:
                zeros[q] += 1
    return np.asarray(sums, dtype=np.int64), np.asarray(zeros, dtype=np.int64)
