"""Integer enumeration kernels.

Two interchangeable implementations live side by side: ``_jit`` (numba
``@njit``) and ``_numpy`` (vectorised numpy, no compilation). The active one is
picked at import time; set ``SYMPART_NO_JIT=1`` to force the numpy path, e.g.
when numba is unavailable or to rule it out while debugging.

Every kernel works on ``int64`` and is exact as long as its caller keeps the
inputs inside the documented range; callers check that and fall back to
Python integers otherwise.
"""

import os

from . import _numpy as numpy_impl

try:
    from . import _jit as jit_impl
except ImportError:  # numba missing
    jit_impl = None


def _want_jit() -> bool:
    flag = os.environ.get("SYMPART_NO_JIT", "").strip().lower()
    return jit_impl is not None and flag in ("", "0", "false", "no")


impl = jit_impl if _want_jit() else numpy_impl
BACKEND = "numba" if impl is jit_impl else "numpy"

signed_subset_sums = impl.signed_subset_sums
compositions = impl.compositions
denumerant_table = impl.denumerant_table

# |value| bound under which int64 kernels are safe
INT64_SAFE = 2**62

__all__ = [
    "BACKEND",
    "INT64_SAFE",
    "compositions",
    "denumerant_table",
    "impl",
    "jit_impl",
    "numpy_impl",
    "signed_subset_sums",
]
