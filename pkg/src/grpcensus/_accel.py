"""Selects between numba-compiled kernels and the plain Python/numpy path.

Set ``GRPCENSUS_DISABLE_NUMBA=1`` before import to force the fallback.
"""
import os

_FLAG = os.environ.get("GRPCENSUS_DISABLE_NUMBA", "").strip().lower()

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

USE_NUMBA = numba is not None and _FLAG not in ("1", "true", "yes", "on")


def jit(fn):
    if USE_NUMBA:
        return numba.njit(cache=True, nogil=True)(fn)
    return fn


def backend() -> str:
    return "numba" if USE_NUMBA else "python"
