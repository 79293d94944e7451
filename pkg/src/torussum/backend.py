"""Accumulation-kernel backend selection.

The strong-mean ladders are the only hot loops in the package. A compiled
extension (``torussum._accel``, Cython) implements them with fused C loops;
``torussum._accel_py`` is a NumPy fallback with identical semantics. The
backend is picked once at import time:

- ``TORUSSUM_BACKEND=auto`` (default): compiled if importable, else NumPy;
- ``TORUSSUM_BACKEND=cython``: compiled, ImportError if missing;
- ``TORUSSUM_BACKEND=python``: always the NumPy fallback.

Both backends take the same prepared arrays; the wrappers here coerce
dtypes and layout so callers can stay loose about them.
"""

from __future__ import annotations

import os

import numpy as np

from . import _accel_py

_CHOICES = ("auto", "python", "cython")


def _select():
    choice = os.environ.get("TORUSSUM_BACKEND", "auto").strip().lower()
    if choice not in _CHOICES:
        raise ValueError(
            f"TORUSSUM_BACKEND={choice!r} not recognized; use one of {_CHOICES}"
        )
    if choice in ("auto", "cython"):
        try:
            from . import _accel

            return _accel, "cython"
        except ImportError:
            if choice == "cython":
                raise
    return _accel_py, "python"


_impl, BACKEND_NAME = _select()


def backend_name() -> str:
    """Which implementation is active: 'cython' or 'python'."""
    return BACKEND_NAME


def _cplx2(a) -> np.ndarray:
    out = np.ascontiguousarray(a, dtype=np.complex128)
    if not out.flags.writeable:  # frozen field arrays cannot back a memoryview
        out = out.copy()
    return out


def _real1(a) -> np.ndarray:
    out = np.ascontiguousarray(a, dtype=np.float64)
    if not out.flags.writeable:
        out = out.copy()
    return out


def strong_mean_sum(coeffs, ex, ey, wx, wy, center=None) -> np.ndarray:
    """Weighted ladder sum over (i,j) of wx[i]*wy[j]*|S_ij - center| per node.

    ``coeffs`` is the (2n+1, 2m+1) coefficient box (multipliers already
    applied), ``ex``/``ey`` the exponential tables from
    :func:`torussum.spectral.exp_tables`, ``wx``/``wy`` the axis weights of
    length n+1 and m+1. Returns a float64 (ny, nx) array.
    """
    ex = _cplx2(ex)
    ey = _cplx2(ey)
    if center is None:
        center = np.zeros((ey.shape[1], ex.shape[1]), dtype=np.complex128)
    return _impl.strong_mean_sum(
        _cplx2(coeffs), ex, ey, _real1(wx), _real1(wy), _cplx2(center)
    )


def abs_partial_sum_table(coeffs, ex, ey, center=None) -> np.ndarray:
    """|S_ij - center| for every (i, j) <= (n, m): float64 (n+1, m+1, ny, nx)."""
    ex = _cplx2(ex)
    ey = _cplx2(ey)
    if center is None:
        center = np.zeros((ey.shape[1], ex.shape[1]), dtype=np.complex128)
    return _impl.abs_partial_sum_table(_cplx2(coeffs), ex, ey, _cplx2(center))
