"""Numba switch for the hot kernels.

Set ``CYLROMAN_NO_NUMBA=1`` to force the pure-numpy code paths; the
numba paths are used whenever numba imports and the flag is unset.
"""
from __future__ import annotations

import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

NUMBA_DISABLED = os.environ.get("CYLROMAN_NO_NUMBA", "").strip() not in ("", "0")
USE_NUMBA = numba is not None and not NUMBA_DISABLED


def njit(fn):
    """Compile ``fn`` in nopython mode, or return it unchanged without numba."""
    if numba is None:
        return fn
    return numba.njit(cache=True, nogil=True)(fn)
