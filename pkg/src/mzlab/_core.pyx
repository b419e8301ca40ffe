# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Bessel J0 and the hot Wigner-grid loops.

Mirrors ``mzlab._core_py`` exactly; the fallback and this module are held
to identical results by the parity tests.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport M_PI, cos, exp, fabs, sin, sqrt

cnp.import_array()

cdef double FOUR_PI = 4.0 * M_PI

# Hankel asymptotic coefficients h[m] = (1^2 3^2 ... (2m-1)^2) (-1)^m / (m! 8^m).
cdef double[14] H

cdef void _init_hankel() noexcept:
    cdef int m
    H[0] = 1.0
    for m in range(1, 14):
        H[m] = H[m - 1] * (-((2.0 * m - 1.0) ** 2)) / (8.0 * m)

_init_hankel()

cdef double SERIES_CUT = 12.0


cdef double j0_scalar(double x) noexcept nogil:
    cdef double ax = fabs(x)
    cdef double q, term, acc, u2, p, qq, chi
    cdef int m
    if ax <= SERIES_CUT:
        q = 0.25 * ax * ax
        term = 1.0
        acc = 1.0
        for m in range(1, 40):
            term *= -q / (m * m)
            acc += term
            if fabs(term) < 1e-18 * fabs(acc):
                break
        return acc
    u2 = 1.0 / (ax * ax)
    p = H[0] + u2 * (-H[2] + u2 * (H[4] + u2 * (-H[6] + u2 * (H[8] + u2 * (-H[10] + u2 * H[12])))))
    qq = (H[1] + u2 * (-H[3] + u2 * (H[5] + u2 * (-H[7] + u2 * (H[9] + u2 * (-H[11] + u2 * H[13])))))) / ax
    chi = ax - 0.25 * M_PI
    return sqrt(2.0 / (M_PI * ax)) * (p * cos(chi) - qq * sin(chi))


def j0_array(x):
    """Bessel function of order zero, elementwise.

    Power series for |x| <= 12, Hankel asymptotic expansion beyond;
    absolute error below 1e-11 everywhere (pinned by tests at 1e-9).
    """
    cdef cnp.ndarray[double, ndim=1] xs = np.ascontiguousarray(x, dtype=np.float64).ravel()
    cdef cnp.ndarray[double, ndim=1] out = np.empty_like(xs)
    cdef Py_ssize_t i, n = xs.shape[0]
    with nogil:
        for i in range(n):
            out[i] = j0_scalar(xs[i])
    return out.reshape(np.shape(x))


def wigner_ordinary_grid(x, k, double delta, double x0, double k0, double shift):
    """Ordinary-channel Wigner map of a split Gaussian packet on an (x, k) grid.

    Two displaced humps plus the cos(k*shift)-modulated interference ridge
    halfway between them; rows index x, columns index k.
    """
    cdef cnp.ndarray[double, ndim=1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=1] kv = np.ascontiguousarray(k, dtype=np.float64)
    cdef Py_ssize_t nx = xv.shape[0], nk = kv.shape[0]
    cdef cnp.ndarray[double, ndim=2] out = np.empty((nx, nk))
    cdef cnp.ndarray[double, ndim=1] ek = np.empty(nk), ck = np.empty(nk)
    cdef double inv2d2 = 1.0 / (2.0 * delta * delta)
    cdef double humps, ridge, dx
    cdef Py_ssize_t i, j
    with nogil:
        for j in range(nk):
            dx = kv[j] - k0
            ek[j] = exp(-2.0 * delta * delta * dx * dx)
            ck[j] = cos(kv[j] * shift)
        for i in range(nx):
            humps = exp(-((xv[i] - x0 + shift) ** 2) * inv2d2) + exp(-((xv[i] - x0) ** 2) * inv2d2)
            ridge = 2.0 * exp(-((xv[i] - x0 + 0.5 * shift) ** 2) * inv2d2)
            for j in range(nk):
                out[i, j] = ek[j] * (humps + ridge * ck[j]) / FOUR_PI
    return out


def wigner_averaged_gauss_grid(x, k, double delta, double k0, double sigma, double delta0):
    """Gaussian-noise ensemble average of the ordinary-channel Wigner map.

    Closed form for a packet centered at x0 = 0: a fixed hump, a
    sigma-broadened hump at -delta0, and a damped interference ridge whose
    local k-frequency depends on x (it bends toward negative x).
    """
    cdef cnp.ndarray[double, ndim=1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=1] kv = np.ascontiguousarray(k, dtype=np.float64)
    cdef Py_ssize_t nx = xv.shape[0], nk = kv.shape[0]
    cdef cnp.ndarray[double, ndim=2] out = np.empty((nx, nk))
    cdef cnp.ndarray[double, ndim=1] ek = np.empty(nk), dampk = np.empty(nk)
    cdef double d2 = delta * delta, s2 = sigma * sigma
    cdef double big = d2 + s2, mid = d2 + 0.25 * s2
    cdef double amp1 = sqrt(d2 / big), ampr = 2.0 * sqrt(d2 / mid)
    cdef double hump0, hump1, renv, freq, dk
    cdef Py_ssize_t i, j
    with nogil:
        for j in range(nk):
            dk = kv[j] - k0
            ek[j] = exp(-2.0 * d2 * dk * dk)
            dampk[j] = exp(-kv[j] * kv[j] * d2 * s2 / (2.0 * mid))
        for i in range(nx):
            hump0 = exp(-xv[i] * xv[i] / (2.0 * d2))
            hump1 = amp1 * exp(-((xv[i] + delta0) ** 2) / (2.0 * big))
            renv = ampr * exp(-((xv[i] + 0.5 * delta0) ** 2) / (2.0 * mid))
            freq = (2.0 * d2 * delta0 - xv[i] * s2) / (2.0 * mid)
            for j in range(nk):
                out[i, j] = ek[j] * (hump0 + hump1 + renv * dampk[j] * cos(kv[j] * freq)) / FOUR_PI
    return out


def wigner_weighted_sum_grid(x, k, double delta, double x0, double k0, shifts, weights):
    """Weighted sum of ordinary-channel Wigner maps over shift values.

    Evaluates sum_j weights[j] * W_O(x, k; shifts[j]); with quadrature
    weights this is the generic noise average, with weights 1/n it is the
    Monte-Carlo sample mean.
    """
    cdef cnp.ndarray[double, ndim=1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=1] kv = np.ascontiguousarray(k, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=1] sv = np.ascontiguousarray(shifts, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=1] wv = np.ascontiguousarray(weights, dtype=np.float64)
    cdef Py_ssize_t nx = xv.shape[0], nk = kv.shape[0], ns = sv.shape[0]
    cdef cnp.ndarray[double, ndim=2] out = np.zeros((nx, nk))
    cdef cnp.ndarray[double, ndim=1] ek = np.empty(nk), ck = np.empty(nk)
    cdef double inv2d2 = 1.0 / (2.0 * delta * delta)
    cdef double s, w, humps, ridge, dk
    cdef Py_ssize_t i, j, m
    with nogil:
        for j in range(nk):
            dk = kv[j] - k0
            ek[j] = exp(-2.0 * delta * delta * dk * dk) / FOUR_PI
        for m in range(ns):
            s = sv[m]
            w = wv[m]
            for j in range(nk):
                ck[j] = cos(kv[j] * s)
            for i in range(nx):
                humps = exp(-((xv[i] - x0 + s) ** 2) * inv2d2) + exp(-((xv[i] - x0) ** 2) * inv2d2)
                ridge = 2.0 * exp(-((xv[i] - x0 + 0.5 * s) ** 2) * inv2d2)
                for j in range(nk):
                    out[i, j] += w * ek[j] * (humps + ridge * ck[j])
    return out


def wigner_sample_sums_grid(x, k, double delta, double x0, double k0, shifts):
    """Per-point sum and sum of squares of W_O over a set of shift draws."""
    cdef cnp.ndarray[double, ndim=1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=1] kv = np.ascontiguousarray(k, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=1] sv = np.ascontiguousarray(shifts, dtype=np.float64)
    cdef Py_ssize_t nx = xv.shape[0], nk = kv.shape[0], ns = sv.shape[0]
    cdef cnp.ndarray[double, ndim=2] s1 = np.zeros((nx, nk))
    cdef cnp.ndarray[double, ndim=2] s2 = np.zeros((nx, nk))
    cdef cnp.ndarray[double, ndim=1] ek = np.empty(nk), ck = np.empty(nk)
    cdef double inv2d2 = 1.0 / (2.0 * delta * delta)
    cdef double s, humps, ridge, val, dk
    cdef Py_ssize_t i, j, m
    with nogil:
        for j in range(nk):
            dk = kv[j] - k0
            ek[j] = exp(-2.0 * delta * delta * dk * dk) / FOUR_PI
        for m in range(ns):
            s = sv[m]
            for j in range(nk):
                ck[j] = cos(kv[j] * s)
            for i in range(nx):
                humps = exp(-((xv[i] - x0 + s) ** 2) * inv2d2) + exp(-((xv[i] - x0) ** 2) * inv2d2)
                ridge = 2.0 * exp(-((xv[i] - x0 + 0.5 * s) ** 2) * inv2d2)
                for j in range(nk):
                    val = ek[j] * (humps + ridge * ck[j])
                    s1[i, j] += val
                    s2[i, j] += val * val
    return s1, s2
