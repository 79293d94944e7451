"""Uniform grids on the torus [-pi, pi)^2 and rectangle-rule quadrature.

This module fixes the sampling conventions everything else relies on:
nodes x_j = -pi + 2*pi*j/nx (and the analogous y nodes), field values stored
row-major with y as the slow axis, so ``values[jy, jx] = f(x_jx, y_jy)``.
Both dimensions must be powers of two, >= 4, chosen independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import SamplingError, SizingError

TWO_PI = 2.0 * np.pi
#: total measure of the torus, 4*pi^2
FULL_MEASURE = TWO_PI * TWO_PI


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def _check_dim(name: str, n) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise SizingError(f"{name} must be an integer, got {n!r}")
    n = int(n)
    if n < 4 or not _is_power_of_two(n):
        raise SizingError(f"{name} must be a power of two >= 4, got {n}")
    return n


@dataclass(frozen=True)
class TorusGrid:
    """An nx-by-ny uniform lattice on [-pi, pi)^2.

    Attributes
    ----------
    nx, ny : int
        Node counts along x and y. Powers of two, at least 4.
    """

    nx: int
    ny: int

    def __post_init__(self):
        object.__setattr__(self, "nx", _check_dim("nx", self.nx))
        object.__setattr__(self, "ny", _check_dim("ny", self.ny))

    @property
    def hx(self) -> float:
        return TWO_PI / self.nx

    @property
    def hy(self) -> float:
        return TWO_PI / self.ny

    @property
    def xs(self) -> np.ndarray:
        """x nodes, shape (nx,): -pi + 2*pi*j/nx."""
        return -np.pi + TWO_PI * np.arange(self.nx) / self.nx

    @property
    def ys(self) -> np.ndarray:
        """y nodes, shape (ny,)."""
        return -np.pi + TWO_PI * np.arange(self.ny) / self.ny

    def meshes(self) -> tuple[np.ndarray, np.ndarray]:
        """Full coordinate arrays (X, Y), each of shape (ny, nx)."""
        return np.meshgrid(self.xs, self.ys)


def make_grid(nx: int, ny: int) -> TorusGrid:
    """Construct a grid, rejecting sizes that are not powers of two >= 4."""
    return TorusGrid(nx, ny)


def _freeze_values(grid: TorusGrid, values) -> np.ndarray:
    v = np.asarray(values)
    if v.shape == (grid.ny * grid.nx,):
        v = v.reshape(grid.ny, grid.nx)
    if v.shape != (grid.ny, grid.nx):
        raise SizingError(
            f"values shape {v.shape} does not match grid ({grid.ny}, {grid.nx})"
        )
    v = np.array(v, dtype=np.complex128, order="C")
    if not np.isfinite(v).all():
        jy, jx = np.argwhere(~np.isfinite(v))[0]
        raise SamplingError(
            f"non-finite sample at node (jx={jx}, jy={jy}), "
            f"x={-np.pi + TWO_PI * jx / grid.nx:.6g}, "
            f"y={-np.pi + TWO_PI * jy / grid.ny:.6g}"
        )
    v.flags.writeable = False
    return v


@dataclass(frozen=True)
class SampledField:
    """Complex samples of a function on a :class:`TorusGrid`.

    ``values[jy, jx]`` holds the sample at ``(xs[jx], ys[jy])``. The array is
    copied on construction and marked read-only.
    """

    grid: TorusGrid
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _freeze_values(self.grid, self.values))

    def interpolant(self) -> Callable[[float, float], complex]:
        """Return the trigonometric interpolant through the samples.

        The callable accepts scalar coordinates. At points that coincide
        bitwise with grid nodes it returns the stored sample unchanged;
        elsewhere it evaluates the interpolating trigonometric polynomial.
        """
        grid = self.grid
        nx, ny = grid.nx, grid.ny
        values = self.values
        xs, ys = grid.xs, grid.ys
        fhat = np.fft.fft2(values) / (nx * ny)
        jxf = np.fft.fftfreq(nx, d=1.0 / nx)  # signed integer frequencies
        jyf = np.fft.fftfreq(ny, d=1.0 / ny)

        def evaluate(x: float, y: float) -> complex:
            jx = int(round((x + np.pi) / grid.hx))
            jy = int(round((y + np.pi) / grid.hy))
            if 0 <= jx < nx and 0 <= jy < ny and xs[jx] == x and ys[jy] == y:
                return complex(values[jy, jx])
            # interpolant basis uses the offset phase e^{i j (x + pi)}
            ex = np.exp(1j * jxf * (x + np.pi))
            ey = np.exp(1j * jyf * (y + np.pi))
            return complex(ey @ fhat @ ex)

        return evaluate


def sample(f: Callable, grid: TorusGrid) -> SampledField:
    """Sample ``f(x, y)`` on the grid nodes.

    ``f`` is called with full coordinate meshes and must broadcast; a
    non-finite result anywhere raises :class:`SamplingError` naming the node.
    """
    X, Y = grid.meshes()
    vals = np.asarray(f(X, Y), dtype=np.complex128)
    vals = np.broadcast_to(vals, (grid.ny, grid.nx))
    return SampledField(grid, vals)


def quad_integral(field: SampledField) -> complex:
    """Rectangle-rule integral over the torus: hx*hy * sum of samples.

    Exact for trigonometric polynomials resolved by the grid (no frequency
    at or beyond the Nyquist index in either variable).
    """
    g = field.grid
    return g.hx * g.hy * complex(field.values.sum())
