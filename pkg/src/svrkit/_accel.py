"""Numba switch.

Set ``SVRKIT_DISABLE_NUMBA=1`` to run every kernel on the pure numpy/Python
path.  The flag is read once at import time.
"""
import os

_flag = os.environ.get("SVRKIT_DISABLE_NUMBA", "").strip().lower()
DISABLED = _flag not in ("", "0", "false", "no")

try:
    if DISABLED:
        raise ImportError
    from numba import njit as _numba_njit
except ImportError:  # pragma: no cover - exercised via the env flag
    _numba_njit = None

USE_NUMBA = _numba_njit is not None
BACKEND = "numba" if USE_NUMBA else "numpy"


def njit(fn):
    """``numba.njit(cache=True)`` when enabled, identity otherwise."""
    if USE_NUMBA:
        return _numba_njit(cache=True)(fn)
    return fn
