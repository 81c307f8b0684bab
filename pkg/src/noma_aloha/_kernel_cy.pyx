# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled slot-simulation kernel.

Twin of noma_aloha._kernel_py: same RNG ("splitmix64-counter-v1"), same
operation order, bit-identical output.  Keep the two files in sync.
"""

import numpy as np

from libc.stdint cimport uint64_t, int64_t

cdef uint64_t GOLDEN = 0x9E3779B97F4A7C15u
cdef int POISSON_CAP = 350
cdef double INV_2POW53 = 1.0 / 9007199254740992.0
# build_power_ladder caps Q at 40
cdef int MAX_LEVELS = 64


cdef inline uint64_t mix64(uint64_t z) noexcept nogil:
    z ^= z >> 30
    z *= <uint64_t>0xBF58476D1CE4E5B9u
    z ^= z >> 27
    z *= <uint64_t>0x94D049BB133111EBu
    z ^= z >> 31
    return z


cdef inline double u01(uint64_t x) noexcept nogil:
    return <double>(x >> 11) * INV_2POW53


cdef inline int poisson_draw(double u, double mu, double pmf0) noexcept nogil:
    cdef double p = pmf0
    cdef double cdf = p
    cdef int k = 0
    while u >= cdf and k < POISSON_CAP:
        k += 1
        p = p * (mu / k)
        cdf = cdf + p
    return k


def run_slots(object seed, object slot_start, int64_t n_slots, double mu,
              double pmf0, levels, double thr, bint strict):
    """Simulate n_slots channel-slots; return the int64 histogram of
    decoded counts (length Q+1)."""
    cdef uint64_t seed_u = <uint64_t>(int(seed) & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t start_u = <uint64_t>(int(slot_start) & 0xFFFFFFFFFFFFFFFF)
    v_arr = np.ascontiguousarray(levels, dtype=np.float64)
    cdef double[::1] v = v_arr
    cdef int num_levels = v.shape[0]
    if num_levels > MAX_LEVELS:
        raise ValueError(f"at most {MAX_LEVELS} power levels supported")

    hist = np.zeros(num_levels + 1, dtype=np.int64)
    cdef int64_t[::1] h = hist
    cdef int64_t i
    cdef int q, k, qbar, decoded
    cdef uint64_t s, j
    cdef double u, acc, extra
    cdef int counts[64]
    cdef double interf[64]

    with nogil:
        for i in range(n_slots):
            s = mix64(seed_u ^ mix64(start_u + <uint64_t>i + 1u))
            j = 0
            for q in range(num_levels):
                j += 1
                u = u01(mix64(s + j * GOLDEN))
                counts[q] = poisson_draw(u, mu, pmf0)

            qbar = num_levels
            for q in range(num_levels):
                if counts[q] >= 2:
                    qbar = q
                    break

            acc = 0.0
            for q in range(num_levels - 1, -1, -1):
                interf[q] = acc
                acc += counts[q] * v[q]

            decoded = 0
            extra = 0.0
            for q in range(qbar):
                if counts[q] == 1:
                    if v[q] >= thr * (interf[q] + extra + 1.0):
                        decoded += 1
                    elif strict:
                        extra += v[q]
            h[decoded] += 1
    return hist


def sample_stats(object seed, object slot_start, int64_t n_slots,
                 int num_levels, double mu, double pmf0):
    """Aggregate the raw per-level draws over n_slots: (sum of counts,
    number of zeros) per level."""
    cdef uint64_t seed_u = <uint64_t>(int(seed) & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t start_u = <uint64_t>(int(slot_start) & 0xFFFFFFFFFFFFFFFF)
    if num_levels > MAX_LEVELS:
        raise ValueError(f"at most {MAX_LEVELS} power levels supported")
    sums = np.zeros(num_levels, dtype=np.int64)
    zeros = np.zeros(num_levels, dtype=np.int64)
    cdef int64_t[::1] sm = sums
    cdef int64_t[::1] zm = zeros
    cdef int64_t i
    cdef int q, k
    cdef uint64_t s, j
    with nogil:
        for i in range(n_slots):
            s = mix64(seed_u ^ mix64(start_u + <uint64_t>i + 1u))
            j = 0
            for q in range(num_levels):
                j += 1
                k = poisson_draw(u01(mix64(s + j * GOLDEN)), mu, pmf0)
                sm[q] += k
                if k == 0:
                    zm[q] += 1
    return sums, zeros
