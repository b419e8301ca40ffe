"""Incoming beam states and their position/momentum representations.

Units: hbar = 1 throughout, so momentum and wavenumber are identified;
positions are in Angstrom, wavenumbers in 1/Angstrom.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import AtomicDistributionError


def _ret(values):
    return float(values) if np.ndim(values) == 0 else values


@dataclass(frozen=True)
class GaussianPacket:
    """Gaussian wave packet.

    Parameters
    ----------
    k0 : float
        Mean wavenumber (1/A), positive (forward-propagating).
    delta : float
        Spatial spread (A), positive. The momentum spread is the derived
        quantity ``delta_k = 1 / (2 delta)``; it is never stored.
    x0 : float
        Mean position (A).
    """

    k0: float
    delta: float
    x0: float = 0.0

    def __post_init__(self):
        if not self.delta > 0.0:
            raise ValueError(f"delta must be positive, got {self.delta}")
        if not self.k0 > 0.0:
            raise ValueError(f"k0 must be positive, got {self.k0}")

    @property
    def delta_k(self) -> float:
        """Momentum-space spread, fixed by delta_k * delta = 1/2."""
        return 0.5 / self.delta

    def momentum_window(self, width: float = 8.0) -> tuple[float, float]:
        """Interval k0 +- width * delta_k containing all but a negligible
        fraction of the momentum density (width=8 leaves < 1e-28 outside)."""
        return self.k0 - width * self.delta_k, self.k0 + width * self.delta_k

    def momentum_density(self, k):
        """Momentum density sqrt(2 delta^2 / pi) * exp(-2 delta^2 (k - k0)^2).

        Normalized to 1 over k; peak value sqrt(2/pi)*delta at k = k0.
        """
        k = np.asarray(k, dtype=float)
        d = self.delta
        return _ret(d * np.sqrt(2.0 / np.pi) * np.exp(-2.0 * d * d * (k - self.k0) ** 2))

    def momentum_amplitude(self, k):
        """Momentum wavefunction (2 delta^2/pi)^(1/4) exp(-delta^2 (k-k0)^2 - i (k-k0) x0).

        Its squared modulus is ``momentum_density``; Fourier pair of
        ``position_wavefunction`` under phi(k) = (2 pi)^(-1/2) Int psi(x) e^(-ikx) dx.
        """
        k = np.asarray(k, dtype=float)
        d = self.delta
        amp = (2.0 * d * d / np.pi) ** 0.25 * np.exp(-d * d * (k - self.k0) ** 2)
        phase = np.exp(-1j * (k - self.k0) * self.x0)
        out = amp * phase
        return complex(out) if np.ndim(out) == 0 else out

    def position_wavefunction(self, x):
        """Position wavefunction (2 pi delta^2)^(-1/4) exp(-(x-x0)^2/(4 delta^2) + i k0 x)."""
        x = np.asarray(x, dtype=float)
        d = self.delta
        amp = (2.0 * np.pi * d * d) ** -0.25 * np.exp(-((x - self.x0) ** 2) / (4.0 * d * d))
        out = amp * np.exp(1j * self.k0 * x)
        return complex(out) if np.ndim(out) == 0 else out


@dataclass(frozen=True)
class Monochromatic:
    """Momentum eigenstate of wavenumber k (1/A).

    A distinct variant, not a delta -> 0 limit of GaussianPacket, so that
    the exact monochromatic formulas are evaluated without quadrature.
    Pointwise densities do not exist for it.
    """

    k: float

    def __post_init__(self):
        if not self.k > 0.0:
            raise ValueError(f"k must be positive, got {self.k}")

    def momentum_density(self, k):
        raise AtomicDistributionError(
            "monochromatic beam has a delta-distribution density; "
            "use the dedicated monochromatic code paths"
        )

    def position_wavefunction(self, x):
        raise AtomicDistributionError("monochromatic plane wave is not normalizable")


WavePacket = Union[GaussianPacket, Monochromatic]
