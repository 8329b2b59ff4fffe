"""Backend selection for the scanning kernels.

The compiled extension ``rank1lat._kernels`` is used when it imports and
the inputs fit in 64-bit arithmetic; otherwise the pure-Python twin runs.
Set ``RANK1LAT_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernels_py

try:
    if os.environ.get("RANK1LAT_PURE_PYTHON") == "1":
        raise ImportError("pure Python requested")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

# keeps d * (N/2)^2 and n * a below 2**63 for d <= 5
_INT64_SAFE = 1 << 30


def _impl(N):
    if _compiled is not None and N < _INT64_SAFE:
        return _compiled
    return _kernels_py


def _reduced(N, gen):
    return tuple(a % N for a in gen)


def oracle_min(N, gen, floor=0):
    return _impl(N).oracle_min(N, _reduced(N, gen), floor)


def oracle_argmin(N, gen):
    return _impl(N).oracle_argmin(N, _reduced(N, gen))


def scan_strict_b(N, b):
    return _impl(N).scan_strict_b(N, b)


def scan_relaxed_a(N, a):
    return _impl(N).scan_relaxed_a(N, a)


def pointset_min_sq(N, gen):
    return _impl(N).pointset_min_sq(N, _reduced(N, gen))
