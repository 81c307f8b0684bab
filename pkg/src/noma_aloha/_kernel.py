"""Kernel backend selection.

Prefers the compiled Cython kernel; falls back to the pure-Python twin
when the extension is not built.  Set NOMA_ALOHA_BACKEND=python to force
the fallback (used by the benchmark and the bit-identity tests).  Both
backends produce bit-identical results.
"""

import os

RNG_NAME = "splitmix64-counter-v1"

_forced = os.environ.get("NOMA_ALOHA_BACKEND", "").lower()

if _forced == "python":
    from . import _kernel_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernel_cy as _impl

        BACKEND = "cython"
    except ImportError:
        if _forced == "cython":
            raise
        from . import _kernel_py as _impl

        BACKEND = "python"

run_slots = _impl.run_slots
sample_stats = _impl.sample_stats
