"""Kernel backend selection.

Hot finite-field scan loops are compiled with numba unless FKIT_NUMBA=0 is
set in the environment (or numba is unavailable), in which case the same
loop bodies run as plain Python over numpy arrays — identical results,
much slower.  `benchmarks/bench_kernels.py` compares the two paths.
"""

import os

USE_NUMBA = os.environ.get("FKIT_NUMBA", "1") != "0"

if USE_NUMBA:
    try:
        from numba import njit as _njit
    except ImportError:  # pragma: no cover
        USE_NUMBA = False

if USE_NUMBA:
    def jit(fn):
        return _njit(cache=True)(fn)
else:
    def jit(fn):
        return fn


def backend_name():
    return "numba" if USE_NUMBA else "python"
