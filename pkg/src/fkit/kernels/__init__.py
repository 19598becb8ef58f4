"""Compiled finite-field scan kernels (numba-accelerated with a plain
Python fallback selected by FKIT_NUMBA=0)."""

from .backend import USE_NUMBA, backend_name
from .pack import PackedAlgebra, pack_jordan, pack_w, unpack_jordan, unpack_w
