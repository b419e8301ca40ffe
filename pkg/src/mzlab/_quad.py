"""Small quadrature helpers shared by the analytic modules."""

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=64)
def _leggauss(n: int):
    return np.polynomial.legendre.leggauss(n)


def gauss_legendre(a: float, b: float, n: int):
    """Nodes and weights of n-point Gauss-Legendre quadrature on [a, b]."""
    t, w = _leggauss(int(n))
    half = 0.5 * (b - a)
    return a + half * (t + 1.0), half * w
