"""One-variable counterparts of the torus machinery.

The single-variable decompositions and strong means are stated on the
circle [-pi, pi); this module provides just enough grid/spectrum support
for them, with the same conventions as the 2-d code: nodes at
x_j = -pi + 2*pi*j/n, analysis through the FFT with the (-1)^j phase
correction for the node offset.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import AliasingError, SamplingError, SizingError, TruncationError
from .grid import TWO_PI, _check_dim


@dataclass(frozen=True)
class CircleGrid:
    """Uniform n-point lattice on [-pi, pi); n a power of two >= 4."""

    n: int

    def __post_init__(self):
        object.__setattr__(self, "n", _check_dim("n", self.n))

    @property
    def h(self) -> float:
        return TWO_PI / self.n

    @property
    def xs(self) -> np.ndarray:
        return -np.pi + TWO_PI * np.arange(self.n) / self.n


@dataclass(frozen=True)
class CircleField:
    """Complex samples on a :class:`CircleGrid`; copied and frozen."""

    grid: CircleGrid
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values)
        if v.shape != (self.grid.n,):
            raise SizingError(f"values shape {v.shape} != ({self.grid.n},)")
        v = np.array(v, dtype=np.complex128)
        if not np.isfinite(v).all():
            j = int(np.flatnonzero(~np.isfinite(v))[0])
            raise SamplingError(f"non-finite sample at node j={j}")
        v.flags.writeable = False
        object.__setattr__(self, "values", v)


@dataclass(frozen=True)
class CircleSpectrum:
    """Fourier coefficients over the symmetric window |j| <= m.

    ``coeffs[j + m]`` is the coefficient of e^{ijx}.
    """

    grid: CircleGrid
    m: int
    coeffs: np.ndarray

    def __post_init__(self):
        if not isinstance(self.m, (int, np.integer)) or self.m < 0:
            raise ValueError(f"window half-width must be a nonnegative int, got {self.m}")
        c = np.asarray(self.coeffs)
        if c.shape != (2 * self.m + 1,):
            raise SizingError(f"coeffs shape {c.shape} != ({2 * self.m + 1},)")
        c = np.array(c, dtype=np.complex128)
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)


def make_circle_grid(n: int) -> CircleGrid:
    return CircleGrid(n)


def sample_circle(f: Callable, grid: CircleGrid) -> CircleField:
    """Sample ``f(x)`` at the grid nodes."""
    vals = np.broadcast_to(np.asarray(f(grid.xs), dtype=np.complex128), (grid.n,))
    return CircleField(grid, vals)


def circle_quad(field: CircleField) -> complex:
    """Rectangle-rule integral over the circle."""
    return field.grid.h * complex(field.values.sum())


def circle_coefficients(field: CircleField, m: int) -> CircleSpectrum:
    """Analyze a sampled field into coefficients over |j| <= m.

    Requires 2*m < n so the window is alias-free on this grid.
    """
    n = field.grid.n
    if not isinstance(m, (int, np.integer)) or m < 0:
        raise ValueError(f"window half-width must be a nonnegative int, got {m}")
    if 2 * m >= n:
        raise AliasingError(f"window |j| <= {m} does not fit alias-free on {n} nodes")
    F = np.fft.fft(field.values) / n
    js = np.arange(-m, m + 1)
    coeffs = ((-1.0) ** js) * F[js % n]
    return CircleSpectrum(field.grid, int(m), coeffs)


def circle_synthesize(grid: CircleGrid, coeffs: np.ndarray) -> CircleField:
    """Evaluate sum of coeffs[j+m] e^{ijx} at the grid nodes."""
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    m = (coeffs.shape[0] - 1) // 2
    if coeffs.shape != (2 * m + 1,):
        raise SizingError("coefficient array must have odd length")
    if 2 * m >= grid.n:
        raise AliasingError(f"window |j| <= {m} does not fit alias-free on {grid.n} nodes")
    js = np.arange(-m, m + 1)
    G = np.zeros(grid.n, dtype=np.complex128)
    G[js % grid.n] = coeffs * ((-1.0) ** js)
    return CircleField(grid, np.fft.ifft(G) * grid.n)


def axis_window(order: int, conjugate: bool, modified: bool) -> np.ndarray:
    """Frequency weights over j = -order..order for one truncation axis.

    Sharp cutoff keeps weight 1 on the whole window; the modified cutoff
    halves the extreme frequencies |j| = order. A conjugate axis multiplies
    by -i*sign(j), which zeroes the j = 0 line.
    """
    if not isinstance(order, (int, np.integer)) or order < 0:
        raise ValueError(f"truncation order must be a nonnegative int, got {order}")
    if modified and order < 1:
        raise ValueError("modified truncation requires order >= 1")
    js = np.arange(-order, order + 1)
    if modified:
        w = np.where(np.abs(js) < order, 1.0, 0.5).astype(np.complex128)
    else:
        w = np.ones(2 * order + 1, dtype=np.complex128)
    if conjugate:
        w = w * np.where(js > 0, -1j, np.where(js < 0, 1j, 0j))
    return w


def circle_partial_sum(
    spectrum: CircleSpectrum,
    order: int,
    conjugate: bool = False,
    modified: bool = False,
) -> CircleField:
    """Truncate a spectrum at ``order`` and synthesize on its grid.

    ``conjugate`` applies the -i*sign(j) multiplier; ``modified`` halves the
    extreme frequencies (requires order >= 1).
    """
    if not isinstance(order, (int, np.integer)) or order < 0:
        raise ValueError(f"truncation order must be a nonnegative int, got {order}")
    if order > spectrum.m:
        raise TruncationError(
            f"order {order} exceeds stored window half-width {spectrum.m}"
        )
    w = axis_window(int(order), conjugate, modified)
    sub = spectrum.coeffs[spectrum.m - order : spectrum.m + order + 1]
    return circle_synthesize(spectrum.grid, sub * w)
