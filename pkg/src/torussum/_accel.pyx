# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementation of the hot accumulation kernels.

Same contract as torussum._accel_py, with the loops fused into C so the
intermediate ladder arrays never materialize. The per-point accumulation
order (i ascending, then j ascending) matches the NumPy fallback.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()

ctypedef double complex cplx


def strong_mean_sum(cplx[:, ::1] coeffs, cplx[:, ::1] ex, cplx[:, ::1] ey,
                    double[::1] wx, double[::1] wy, cplx[:, ::1] center):
    """Accumulate sum over (i, j) of wx[i]*wy[j]*|S_ij - center| per node."""
    cdef Py_ssize_t n = wx.shape[0] - 1
    cdef Py_ssize_t m = wy.shape[0] - 1
    cdef Py_ssize_t nx = ex.shape[1]
    cdef Py_ssize_t ny = ey.shape[1]
    out_arr = np.zeros((ny, nx), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    ss_arr = np.empty((m + 1, nx), dtype=np.complex128)
    cdef cplx[:, ::1] ss = ss_arr
    hp_arr = np.empty(m + 1, dtype=np.complex128)
    hn_arr = np.empty(m + 1, dtype=np.complex128)
    cdef cplx[::1] hp = hp_arr
    cdef cplx[::1] hn = hn_arr
    cdef Py_ssize_t iy, ix, i, j
    cdef cplx s, d
    cdef double w, dr, di
    for iy in range(ny):
        for j in range(m + 1):
            for ix in range(nx):
                ss[j, ix] = 0
        for i in range(n + 1):
            hp[0] = coeffs[n + i, m] * ey[m, iy]
            for j in range(1, m + 1):
                hp[j] = hp[j - 1] + coeffs[n + i, m + j] * ey[m + j, iy] \
                                  + coeffs[n + i, m - j] * ey[m - j, iy]
            if i > 0:
                hn[0] = coeffs[n - i, m] * ey[m, iy]
                for j in range(1, m + 1):
                    hn[j] = hn[j - 1] + coeffs[n - i, m + j] * ey[m + j, iy] \
                                      + coeffs[n - i, m - j] * ey[m - j, iy]
            for j in range(m + 1):
                w = wx[i] * wy[j]
                if i == 0:
                    for ix in range(nx):
                        s = ss[j, ix] + hp[j] * ex[n, ix]
                        ss[j, ix] = s
                        d = s - center[iy, ix]
                        dr = d.real
                        di = d.imag
                        out[iy, ix] += w * sqrt(dr * dr + di * di)
                else:
                    for ix in range(nx):
                        s = ss[j, ix] + hp[j] * ex[n + i, ix] + hn[j] * ex[n - i, ix]
                        ss[j, ix] = s
                        d = s - center[iy, ix]
                        dr = d.real
                        di = d.imag
                        out[iy, ix] += w * sqrt(dr * dr + di * di)
    return out_arr


def abs_partial_sum_table(cplx[:, ::1] coeffs, cplx[:, ::1] ex, cplx[:, ::1] ey,
                          cplx[:, ::1] center):
    """Table |S_ij - center| for every (i, j) <= (n, m); shape (n+1, m+1, ny, nx)."""
    cdef Py_ssize_t n = (coeffs.shape[0] - 1) // 2
    cdef Py_ssize_t m = (coeffs.shape[1] - 1) // 2
    cdef Py_ssize_t nx = ex.shape[1]
    cdef Py_ssize_t ny = ey.shape[1]
    out_arr = np.empty((n + 1, m + 1, ny, nx), dtype=np.float64)
    cdef double[:, :, :, ::1] out = out_arr
    ss_arr = np.empty((m + 1, nx), dtype=np.complex128)
    cdef cplx[:, ::1] ss = ss_arr
    hp_arr = np.empty(m + 1, dtype=np.complex128)
    hn_arr = np.empty(m + 1, dtype=np.complex128)
    cdef cplx[::1] hp = hp_arr
    cdef cplx[::1] hn = hn_arr
    cdef Py_ssize_t iy, ix, i, j
    cdef cplx s, d
    cdef double dr, di
    for iy in range(ny):
        for j in range(m + 1):
            for ix in range(nx):
                ss[j, ix] = 0
        for i in range(n + 1):
            hp[0] = coeffs[n + i, m] * ey[m, iy]
            for j in range(1, m + 1):
                hp[j] = hp[j - 1] + coeffs[n + i, m + j] * ey[m + j, iy] \
                                  + coeffs[n + i, m - j] * ey[m - j, iy]
            if i > 0:
                hn[0] = coeffs[n - i, m] * ey[m, iy]
                for j in range(1, m + 1):
                    hn[j] = hn[j - 1] + coeffs[n - i, m + j] * ey[m + j, iy] \
                                      + coeffs[n - i, m - j] * ey[m - j, iy]
            for j in range(m + 1):
                if i == 0:
                    for ix in range(nx):
                        s = ss[j, ix] + hp[j] * ex[n, ix]
                        ss[j, ix] = s
                        d = s - center[iy, ix]
                        dr = d.real
                        di = d.imag
                        out[i, j, iy, ix] = sqrt(dr * dr + di * di)
                else:
                    for ix in range(nx):
                        s = ss[j, ix] + hp[j] * ex[n + i, ix] + hn[j] * ex[n - i, ix]
                        ss[j, ix] = s
                        d = s - center[iy, ix]
                        dr = d.real
                        di = d.imag
                        out[i, j, iy, ix] = sqrt(dr * dr + di * di)
    return out_arr
