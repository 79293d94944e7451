"""Fourier analysis, truncation operators, and the quadrature oracle.

Coefficients live on a symmetric frequency box |j| <= mx, |k| <= my with the
index map (j, k) -> coeffs[j + mx, k + my]; j is always the x-frequency and
k the y-frequency, in every module. Analysis and synthesis go through the
FFT; the (-1)^(j+k) phase accounts for the grid origin sitting at -pi
rather than 0.

Truncations are driven by per-axis frequency windows (sharp, edge-halved,
optionally composed with the conjugate multiplier -i*sign(j)), so the plain,
conjugate, and modified partial sums share one code path and the trivial
flag reduces to the plain sum bitwise.

``oracle_partial_sum`` reproduces the same operators by direct kernel
quadrature against the samples. It is deliberately independent of the
spectral route (closed-form kernels, dense matrix products) so the two can
check each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circle import axis_window
from .errors import AliasingError, ResolutionError, SizingError, TruncationError
from .grid import SampledField, TorusGrid
from .kernels import dirichlet, modified_dirichlet, modified_sine_kernel, sine_kernel


@dataclass(frozen=True)
class ConjugacyFlag:
    """Conjugation pattern (a, b): a flags the x axis, b the y axis.

    Each component is 0 (plain) or 1 (conjugate). The flag (0, 0) is the
    identity pattern.
    """

    a: int = 0
    b: int = 0

    def __post_init__(self):
        for name, v in (("a", self.a), ("b", self.b)):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or v not in (0, 1):
                raise ValueError(f"flag component {name} must be 0 or 1, got {v!r}")
        object.__setattr__(self, "a", int(self.a))
        object.__setattr__(self, "b", int(self.b))


@dataclass(frozen=True)
class SpectralField:
    """Fourier coefficients of a field over a symmetric frequency box.

    ``coeffs[j + mx, k + my]`` multiplies e^{i(jx + ky)}. The array is
    copied and frozen on construction.
    """

    grid: TorusGrid
    mx: int
    my: int
    coeffs: np.ndarray

    def __post_init__(self):
        for name, v in (("mx", self.mx), ("my", self.my)):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or v < 0:
                raise ValueError(f"{name} must be a nonnegative int, got {v!r}")
        object.__setattr__(self, "mx", int(self.mx))
        object.__setattr__(self, "my", int(self.my))
        c = np.asarray(self.coeffs)
        want = (2 * self.mx + 1, 2 * self.my + 1)
        if c.shape != want:
            raise SizingError(f"coeffs shape {c.shape} != {want}")
        c = np.array(c, dtype=np.complex128, order="C")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    def coefficient(self, j: int, k: int) -> complex:
        """The coefficient of e^{i(jx + ky)} for |j| <= mx, |k| <= my."""
        if abs(j) > self.mx or abs(k) > self.my:
            raise TruncationError(f"frequency ({j}, {k}) outside stored box")
        return complex(self.coeffs[j + self.mx, k + self.my])


def _phase(mx: int, my: int) -> np.ndarray:
    js = np.arange(-mx, mx + 1)
    ks = np.arange(-my, my + 1)
    return np.outer((-1.0) ** js, (-1.0) ** ks)


def coefficients(field: SampledField, mx: int, my: int) -> SpectralField:
    """Analyze a sampled field over the box |j| <= mx, |k| <= my.

    Computed with the FFT; equals the rectangle-rule quadrature of
    f(x, y) e^{-i(jx + ky)} / (4 pi^2) entry for entry. Requires
    2*mx < nx and 2*my < ny so the box is alias-free.
    """
    grid = field.grid
    for m, n, axis in ((mx, grid.nx, "x"), (my, grid.ny, "y")):
        if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 0:
            raise ValueError(f"m{axis} must be a nonnegative int, got {m!r}")
        if 2 * m >= n:
            raise AliasingError(
                f"box half-width {m} along {axis} needs 2*{m} < {n} grid nodes"
            )
    F = np.fft.fft2(field.values) / (grid.nx * grid.ny)
    js = np.arange(-mx, mx + 1)
    ks = np.arange(-my, my + 1)
    box = F[np.ix_(ks % grid.ny, js % grid.nx)].T * _phase(mx, my)
    return SpectralField(grid, int(mx), int(my), box)


def synthesize_box(grid: TorusGrid, box: np.ndarray) -> SampledField:
    """Evaluate sum of box[j+mx, k+my] e^{i(jx+ky)} at the grid nodes.

    The box must be odd-sized and alias-free on the grid.
    """
    box = np.asarray(box, dtype=np.complex128)
    mx = (box.shape[0] - 1) // 2
    my = (box.shape[1] - 1) // 2
    if box.shape != (2 * mx + 1, 2 * my + 1):
        raise SizingError("coefficient box must be odd-sized in both axes")
    if 2 * mx >= grid.nx or 2 * my >= grid.ny:
        raise AliasingError(
            f"box ({mx}, {my}) does not fit alias-free on ({grid.nx}, {grid.ny})"
        )
    js = np.arange(-mx, mx + 1)
    ks = np.arange(-my, my + 1)
    G = np.zeros((grid.ny, grid.nx), dtype=np.complex128)
    G[np.ix_(ks % grid.ny, js % grid.nx)] = (box * _phase(mx, my)).T
    return SampledField(grid, np.fft.ifft2(G) * (grid.nx * grid.ny))


def windowed_box(
    spectrum: SpectralField,
    n: int,
    m: int,
    flag: ConjugacyFlag = ConjugacyFlag(),
    modified_x: bool = False,
    modified_y: bool = False,
) -> np.ndarray:
    """The (2n+1, 2m+1) coefficient box of a truncation operator.

    Extracts the sub-box of ``spectrum`` and applies the per-axis windows:
    sharp or edge-halved cutoff composed with the conjugate multiplier where
    the flag requests it.
    """
    for order, stored, axis in ((n, spectrum.mx, "x"), (m, spectrum.my, "y")):
        if isinstance(order, bool) or not isinstance(order, (int, np.integer)) or order < 0:
            raise ValueError(f"degree along {axis} must be a nonnegative int, got {order!r}")
        if order > stored:
            raise TruncationError(
                f"degree {order} along {axis} exceeds stored half-width {stored}"
            )
    n, m = int(n), int(m)
    wx = axis_window(n, bool(flag.a), modified_x)
    wy = axis_window(m, bool(flag.b), modified_y)
    sub = spectrum.coeffs[
        spectrum.mx - n : spectrum.mx + n + 1,
        spectrum.my - m : spectrum.my + m + 1,
    ]
    return sub * np.outer(wx, wy)


def partial_sum(spectrum: SpectralField, n: int, m: int) -> SampledField:
    """Rectangular partial sum of degrees (n, m), evaluated on the grid."""
    return synthesize_box(spectrum.grid, windowed_box(spectrum, n, m))


def conjugate_partial_sum(
    spectrum: SpectralField, n: int, m: int, flag: ConjugacyFlag
) -> SampledField:
    """Conjugate partial sum under the given conjugation pattern.

    The flag (0, 0) reproduces ``partial_sum`` bitwise; a conjugate axis of
    degree 0 yields the zero field because the multiplier kills j = 0.
    """
    return synthesize_box(spectrum.grid, windowed_box(spectrum, n, m, flag))


def modified_partial_sum(
    spectrum: SpectralField,
    n: int,
    m: int,
    modified_x: bool = True,
    modified_y: bool = True,
    flag: ConjugacyFlag = ConjugacyFlag(),
) -> SampledField:
    """Partial sum with edge-halved extreme frequencies on selected axes.

    A modified axis must have degree >= 1. With both modifications off this
    is exactly ``conjugate_partial_sum``.
    """
    for on, order, axis in ((modified_x, n, "x"), (modified_y, m, "y")):
        if on and order < 1:
            raise ValueError(f"modified truncation along {axis} requires degree >= 1")
    return synthesize_box(
        spectrum.grid, windowed_box(spectrum, n, m, flag, modified_x, modified_y)
    )


def exp_tables(grid: TorusGrid, n: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    """Exponential tables ex[p+n, jx] = e^{i p x_jx}, ey[q+m, jy] = e^{i q y_jy}."""
    ex = np.exp(1j * np.outer(np.arange(-n, n + 1), grid.xs))
    ey = np.exp(1j * np.outer(np.arange(-m, m + 1), grid.ys))
    return np.ascontiguousarray(ex), np.ascontiguousarray(ey)


def _axis_kernel_matrix(
    nodes: np.ndarray, order: int, conjugate: bool, modified: bool
) -> np.ndarray:
    diffs = nodes[:, None] - nodes[None, :]
    if modified:
        return modified_sine_kernel(order, diffs) if conjugate else modified_dirichlet(order, diffs)
    return sine_kernel(order, diffs) if conjugate else dirichlet(order, diffs)


def oracle_partial_sum(
    field: SampledField,
    n: int,
    m: int,
    flag: ConjugacyFlag = ConjugacyFlag(),
    modified_x: bool = False,
    modified_y: bool = False,
) -> SampledField:
    """Partial sums by direct kernel quadrature, bypassing the FFT route.

    Evaluates (1/pi^2) times the rectangle-rule double integral of
    f(s, t) Kx(x - s) Ky(y - t) with the closed-form kernel for each axis:
    sharp cutoff, edge-halved cutoff, or their conjugate (sine) variants.
    Requires nx >= 4*(n+1) and ny >= 4*(m+1) so the quadrature resolves the
    kernels exactly; a conjugate axis needs no extra margin but keeps the
    same rule for uniformity.
    """
    grid = field.grid
    for order, count, axis in ((n, grid.nx, "x"), (m, grid.ny, "y")):
        if isinstance(order, bool) or not isinstance(order, (int, np.integer)) or order < 0:
            raise ValueError(f"degree along {axis} must be a nonnegative int, got {order!r}")
        if count < 4 * (order + 1):
            raise ResolutionError(
                f"grid {axis} count {count} < 4*({order}+1); kernel order {order} unresolved"
            )
    for on, order, axis in ((modified_x, n, "x"), (modified_y, m, "y")):
        if on and order < 1:
            raise ValueError(f"modified truncation along {axis} requires degree >= 1")
    kx = _axis_kernel_matrix(grid.xs, int(n), bool(flag.a), modified_x)
    ky = _axis_kernel_matrix(grid.ys, int(m), bool(flag.b), modified_y)
    scale = grid.hx * grid.hy / (np.pi * np.pi)
    out = scale * (ky @ field.values @ kx.T)
    return SampledField(grid, out)
