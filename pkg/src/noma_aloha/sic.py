"""Per-channel SIC decodability: SINR evaluation and decoded-signal counts.

Two decoder semantics are provided.  The "paper" decoder judges every
collision-free level independently: a failed SINR test at one level does
not stop cancellation at later levels.  The "strict" decoder keeps a
failed singleton's power in the interference seen by all later levels.
The paper decoder is the default everywhere; the closed-form bounds and
the figure sweeps target it.
"""

import enum
from dataclasses import dataclass

# Relative slack on the SINR threshold.  The ladder is engineered so the
# all-singleton outcome sits exactly at SINR == gamma; without slack the
# comparison would flip on floating-point noise.
SINR_REL_SLACK = 1e-12


class Decoder(str, enum.Enum):
    PAPER = "paper"
    STRICT = "strict"


class Status(str, enum.Enum):
    DECODED = "decoded"
    EMPTY = "empty"
    SINR_FAIL = "sinr_fail"
    COLLISION = "collision"
    BEYOND_QBAR = "beyond_qbar"


@dataclass(frozen=True)
class DecodeResult:
    decoded_count: int
    per_level_status: tuple
    qbar: int


def _check_outcome(ladder, counts):
    if len(counts) != ladder.num_levels:
        raise ValueError(
            f"outcome vector has {len(counts)} entries, ladder has {ladder.num_levels} levels"
        )
    for c in counts:
        if c < 0 or c != int(c):
            raise ValueError(f"outcome counts must be non-negative integers, got {c}")


def _interference_after(levels, counts):
    """interf[q] = sum of M_j * v_j over j > q, accumulated from the bottom.

    The descending accumulation order is shared with the simulation
    kernels so the reference decoder is bit-identical to them.
    """
    n = len(levels)
    interf = [0.0] * n
    acc = 0.0
    for q in range(n - 1, -1, -1):
        interf[q] = acc
        acc += counts[q] * levels[q]
    return interf


def sinr_at_level(ladder, counts, level):
    """SINR of the (assumed single) signal at 1-based `level`, given that
    all levels above it were cancelled."""
    _check_outcome(ladder, counts)
    if not 1 <= level <= ladder.num_levels:
        raise IndexError(f"level {level} out of range 1..{ladder.num_levels}")
    interf = _interference_after(ladder.levels, counts)
    return ladder.levels[level - 1] / (interf[level - 1] + 1.0)


def last_collision_free_level(counts):
    """Largest prefix length with every count <= 1 (0 if the first level
    already collides, Q if nothing collides)."""
    for i, c in enumerate(counts):
        if c >= 2:
            return i
    return len(counts)


def is_all_singleton(counts):
    return all(c in (0, 1) for c in counts)


def _decode(ladder, counts, gamma, carry_failed_power):
    _check_outcome(ladder, counts)
    levels = ladder.levels
    n = len(levels)
    thr = gamma * (1.0 - SINR_REL_SLACK)
    interf = _interference_after(levels, counts)
    qbar = last_collision_free_level(counts)

    status = [None] * n
    decoded = 0
    extra = 0.0
    for q in range(qbar):
        if counts[q] == 0:
            status[q] = Status.EMPTY
        elif levels[q] >= thr * (interf[q] + extra + 1.0):
            status[q] = Status.DECODED
            decoded += 1
        else:
            status[q] = Status.SINR_FAIL
            if carry_failed_power:
                extra += levels[q]
    if qbar < n:
        status[qbar] = Status.COLLISION
        for q in range(qbar + 1, n):
            status[q] = Status.BEYOND_QBAR
    return DecodeResult(decoded, tuple(status), qbar)


def decode_count_paper(ladder, counts, gamma):
    """Decoded-signal count with each collision-free level judged
    independently (literal SIC bookkeeping)."""
    return _decode(ladder, counts, gamma, carry_failed_power=False)


def decode_count_strict(ladder, counts, gamma):
    """Decoded-signal count where an undecodable singleton's power stays
    in the interference of every later level."""
    return _decode(ladder, counts, gamma, carry_failed_power=True)


def decode_count(ladder, counts, gamma, decoder=Decoder.PAPER):
    if Decoder(decoder) is Decoder.STRICT:
        return decode_count_strict(ladder, counts, gamma)
    return decode_count_paper(ladder, counts, gamma)
