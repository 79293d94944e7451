"""NumPy implementation of the hot accumulation kernels.

Both entry points walk the truncation ladder incrementally: the partial sum
of degrees (i, j) is obtained from already-accumulated lower degrees by
adding the new frequency rings, so the full ladder over (i, j) <= (n, m)
costs O(n*m*nodes) instead of O(n^2*m^2*nodes). The per-point accumulation
order (i ascending, then j ascending) matches the compiled backend, so the
two agree to the last few ulps.

Inputs are prepared by :mod:`torussum.backend`: ``coeffs`` is the
(2n+1, 2m+1) coefficient box with any conjugacy multipliers already
applied, ``ex``/``ey`` are exponential node tables, ``wx``/``wy`` the
per-axis weight vectors, and ``center`` the field subtracted before taking
absolute values (zeros for none).
"""

from __future__ import annotations

import numpy as np


def _ring_updates(coeff_rows: np.ndarray, ey: np.ndarray) -> np.ndarray:
    """Running y-sums H[j, jy] = sum over |q| <= j of c[q] * ey[q, jy]."""
    m = (coeff_rows.shape[0] - 1) // 2
    G = coeff_rows[:, None] * ey  # (2m+1, ny)
    rings = np.empty((m + 1, ey.shape[1]), dtype=np.complex128)
    rings[0] = G[m]
    if m > 0:
        rings[1:] = G[m + 1 :] + G[m - 1 :: -1]
    return np.cumsum(rings, axis=0)


def strong_mean_sum(coeffs, ex, ey, wx, wy, center):
    """Accumulate sum over (i, j) of wx[i]*wy[j]*|S_ij - center| per node."""
    n = wx.shape[0] - 1
    m = wy.shape[0] - 1
    nx = ex.shape[1]
    ny = ey.shape[1]
    out = np.zeros((ny, nx), dtype=np.float64)
    acc = np.zeros((m + 1, ny, nx), dtype=np.complex128)
    for i in range(n + 1):
        hp = _ring_updates(coeffs[n + i], ey)  # (m+1, ny)
        acc += hp[:, :, None] * ex[n + i][None, None, :]
        if i > 0:
            hn = _ring_updates(coeffs[n - i], ey)
            acc += hn[:, :, None] * ex[n - i][None, None, :]
        out += np.einsum("j,jyx->yx", wx[i] * wy, np.abs(acc - center[None, :, :]))
    return out


def abs_partial_sum_table(coeffs, ex, ey, center):
    """Table |S_ij - center| for every (i, j) <= (n, m); shape (n+1, m+1, ny, nx)."""
    n = (coeffs.shape[0] - 1) // 2
    m = (coeffs.shape[1] - 1) // 2
    nx = ex.shape[1]
    ny = ey.shape[1]
    out = np.empty((n + 1, m + 1, ny, nx), dtype=np.float64)
    acc = np.zeros((m + 1, ny, nx), dtype=np.complex128)
    for i in range(n + 1):
        hp = _ring_updates(coeffs[n + i], ey)
        acc += hp[:, :, None] * ex[n + i][None, None, :]
        if i > 0:
            hn = _ring_updates(coeffs[n - i], ey)
            acc += hn[:, :, None] * ex[n - i][None, None, :]
        np.abs(acc - center[None, :, :], out=out[i])
    return out
