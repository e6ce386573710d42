"""Sampled-evaluation kernels for rational curves.

The same three routines exist in two backends:

* ``_numba`` -- ``@njit`` loops, used by default when numba imports cleanly;
* ``_numpy`` -- vectorized fallback, always available.

Selection is controlled by the ``SPIRALINV_KERNELS`` environment variable:
``auto`` (default), ``numba`` (require it) or ``numpy`` (force fallback).
``benchmarks/bench_kernels.py`` compares the two.
"""

from __future__ import annotations

import os

import numpy as np

_choice = os.environ.get("SPIRALINV_KERNELS", "auto").lower()
if _choice not in ("auto", "numba", "numpy"):
    raise ValueError(f"SPIRALINV_KERNELS must be auto|numba|numpy, got {_choice!r}")

if _choice in ("auto", "numba"):
    try:
        from . import _numba as _impl
        BACKEND = "numba"
    except ImportError:
        if _choice == "numba":
            raise
        from . import _numpy as _impl
        BACKEND = "numpy"
else:
    from . import _numpy as _impl
    BACKEND = "numpy"


def _as_c(a):
    return np.ascontiguousarray(a, dtype=np.float64)


def rational_frame(xn, yn, dn, ts):
    """Points, first derivatives and signed curvature of a rational curve.

    Coefficients ascending; returns (x, y, dx, dy, k) arrays over ts.
    """
    return _impl.rational_frame(_as_c(xn), _as_c(yn), _as_c(dn), _as_c(ts))


def speeds(xn, yn, dn, ts):
    """|r'(t)| over ts."""
    return _impl.speeds(_as_c(xn), _as_c(yn), _as_c(dn), _as_c(ts))


def arc_length_cumulative(xn, yn, dn, ts):
    """Cumulative arc length at each ts node (5-point Gauss-Legendre per gap)."""
    return _impl.arc_length_cumulative(_as_c(xn), _as_c(yn), _as_c(dn), _as_c(ts))


_warm = False


def warmup():
    """Force JIT compilation (no-op cost on the numpy backend)."""
    global _warm
    if _warm:
        return
    c = np.array([0.0, 1.0, 0.5], dtype=np.float64)
    d = np.array([1.0, 0.1, 0.2], dtype=np.float64)
    ts = np.linspace(0.0, 1.0, 8)
    rational_frame(c, c, d, ts)
    speeds(c, c, d, ts)
    arc_length_cumulative(c, c, d, ts)
    _warm = True
