"""Pure-numpy fallback for the compiled kernels in ``mzlab._core``.

Function-for-function mirror of the Cython module. ``mzlab._backend``
selects this module when the extension is unavailable or when the
environment variable ``MZLAB_BACKEND=python`` is set. Both backends are
held to identical results by the parity tests.
"""

import numpy as np

_FOUR_PI = 4.0 * np.pi

# Hankel asymptotic coefficients h[m] = (1^2 3^2 ... (2m-1)^2) (-1)^m / (m! 8^m).
_NH = 14


def _hankel_coeffs(n=_NH):
    c = np.empty(n)
    c[0] = 1.0
    for m in range(1, n):
        c[m] = c[m - 1] * (-((2 * m - 1) ** 2)) / (8.0 * m)
    return c


_H = _hankel_coeffs()

# Power series is used up to this |x|; the truncated Hankel expansion only
# reaches the 1e-9 accuracy target beyond it (divergent-series floor).
_SERIES_CUT = 12.0
_SERIES_TERMS = 40


def j0_array(x):
    """Bessel function of order zero, elementwise.

    Power series for |x| <= 12, Hankel asymptotic expansion beyond;
    absolute error below 1e-11 everywhere (pinned by tests at 1e-9).
    """
    x = np.ascontiguousarray(x, dtype=np.float64)
    ax = np.abs(x)
    out = np.empty_like(ax)
    small = ax <= _SERIES_CUT
    if small.any():
        q = 0.25 * ax[small] ** 2
        term = np.ones_like(q)
        acc = np.ones_like(q)
        for m in range(1, _SERIES_TERMS):
            term = term * (-q / (m * m))
            acc = acc + term
        out[small] = acc
    big = ~small
    if big.any():
        z = ax[big]
        u2 = 1.0 / (z * z)
        p = _H[0] + u2 * (-_H[2] + u2 * (_H[4] + u2 * (-_H[6] + u2 * (_H[8] + u2 * (-_H[10] + u2 * _H[12])))))
        q = (_H[1] + u2 * (-_H[3] + u2 * (_H[5] + u2 * (-_H[7] + u2 * (_H[9] + u2 * (-_H[11] + u2 * _H[13])))))) / z
        chi = z - 0.25 * np.pi
        out[big] = np.sqrt(2.0 / (np.pi * z)) * (p * np.cos(chi) - q * np.sin(chi))
    return out


def wigner_ordinary_grid(x, k, delta, x0, k0, shift):
    """Ordinary-channel Wigner map of a split Gaussian packet on an (x, k) grid.

    Two displaced humps plus the cos(k*shift)-modulated interference ridge
    halfway between them; rows index x, columns index k.
    """
    x = np.ascontiguousarray(x, dtype=np.float64)
    k = np.ascontiguousarray(k, dtype=np.float64)
    inv2d2 = 1.0 / (2.0 * delta * delta)
    ek = np.exp(-2.0 * delta * delta * (k - k0) ** 2)
    ck = np.cos(k * shift)
    xs = x[:, None]
    humps = np.exp(-((xs - x0 + shift) ** 2) * inv2d2) + np.exp(-((xs - x0) ** 2) * inv2d2)
    ridge = 2.0 * np.exp(-((xs - x0 + 0.5 * shift) ** 2) * inv2d2)
    return ek[None, :] * (humps + ridge * ck[None, :]) / _FOUR_PI


def wigner_averaged_gauss_grid(x, k, delta, k0, sigma, delta0):
    """Gaussian-noise ensemble average of the ordinary-channel Wigner map.

    Closed form for a packet centered at x0 = 0: a fixed hump, a
    sigma-broadened hump at -delta0, and a damped interference ridge whose
    local k-frequency depends on x (it bends toward negative x).
    """
    x = np.ascontiguousarray(x, dtype=np.float64)
    k = np.ascontiguousarray(k, dtype=np.float64)
    d2 = delta * delta
    s2 = sigma * sigma
    big = d2 + s2
    mid = d2 + 0.25 * s2
    ek = np.exp(-2.0 * d2 * (k - k0) ** 2)
    dampk = np.exp(-(k * k) * (d2 * s2) / (2.0 * mid))
    xs = x[:, None]
    hump0 = np.exp(-xs * xs / (2.0 * d2))
    hump1 = np.sqrt(d2 / big) * np.exp(-((xs + delta0) ** 2) / (2.0 * big))
    renv = 2.0 * np.sqrt(d2 / mid) * np.exp(-((xs + 0.5 * delta0) ** 2) / (2.0 * mid))
    freq = (2.0 * d2 * delta0 - xs * s2) / (2.0 * mid)
    ridge = renv * dampk[None, :] * np.cos(k[None, :] * freq)
    return ek[None, :] * (hump0 + hump1 + ridge) / _FOUR_PI


def wigner_weighted_sum_grid(x, k, delta, x0, k0, shifts, weights):
    """Weighted sum of ordinary-channel Wigner maps over shift values.

    Evaluates sum_j weights[j] * W_O(x, k; shifts[j]); with quadrature
    weights this is the generic noise average, with weights 1/n it is the
    Monte-Carlo sample mean.
    """
    shifts = np.ascontiguousarray(shifts, dtype=np.float64)
    weights = np.ascontiguousarray(weights, dtype=np.float64)
    acc = np.zeros((len(x), len(k)))
    for s, w in zip(shifts, weights):
        acc += w * wigner_ordinary_grid(x, k, delta, x0, k0, float(s))
    return acc


def wigner_sample_sums_grid(x, k, delta, x0, k0, shifts):
    """Per-point sum and sum of squares of W_O over a set of shift draws."""
    shifts = np.ascontiguousarray(shifts, dtype=np.float64)
    s1 = np.zeros((len(x), len(k)))
    s2 = np.zeros((len(x), len(k)))
    for s in shifts:
        w = wigner_ordinary_grid(x, k, delta, x0, k0, float(s))
        s1 += w
        s2 += w * w
    return s1, s2
