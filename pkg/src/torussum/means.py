"""Logarithmic summation means and the exact identities behind them.

The logarithmic weight sequence is l_k = 1 + 1/2 + ... + 1/(k+1), so
l_0 = 1. Four mean families are built on it:

- ``NorlundLogLinear``: the linear mean with weights 1/(n-i+1), i.e.
  t_{n,m} = (1 / (l_n l_m)) * sum_{i<=n, j<=m} S_{i,j} / ((n-i+1)(m-j+1));
- ``NorlundLogStrong``: same weights applied to |S_{i,j} - center|;
- ``RieszLogStrong``: weights 1/(i+1), normalized by l_n l_m;
- ``FejerStrong``: flat weights 1/((n+1)(m+1)).

Alongside the means, this module checks three exact algebraic identities at
grid-point level:

- ``hardy_identity_residual``: the summation-by-parts rearrangement that
  writes the Riesz-weighted strong sum over the ladder in terms of the flat
  ladder averages of lower order;
- ``decomposition_residual_1d``: the modulation identity expressing a lower
  partial sum S_{n-k} through conjugate and plain sums of order k of the
  modulated function, plus one edge-halved sum of order n+1;
- ``decomposition_residual_2d``: its two-variable consequences: the tensor
  factorization of rectangular sums, and the five-term expansion of the
  first mixed remainder term.

All identity checks operate on exact trigonometric-polynomial content, so
their residuals are pure floating-point noise when the code is right.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from . import backend
from .circle import (
    CircleField,
    CircleSpectrum,
    axis_window,
    circle_coefficients,
    circle_partial_sum,
    circle_synthesize,
)
from .errors import CutoffError, TruncationError
from .grid import SampledField
from .spectral import (
    ConjugacyFlag,
    SpectralField,
    coefficients,
    exp_tables,
    synthesize_box,
    windowed_box,
)

# --------------------------------------------------------------------------
# logarithmic weights


def harmonic_sum(n: int) -> float:
    """l_n = sum of 1/k for k = 1..n+1, accumulated with compensation."""
    return float(harmonic_values(n)[-1])


def harmonic_values(n: int) -> np.ndarray:
    """The sequence l_0..l_n as float64, Kahan-compensated prefix sums."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 0:
        raise ValueError(f"index must be a nonnegative int, got {n!r}")
    vals = np.empty(int(n) + 1, dtype=np.float64)
    total = 0.0
    carry = 0.0
    for k in range(1, int(n) + 2):
        term = 1.0 / k - carry
        fresh = total + term
        carry = (fresh - total) - term
        total = fresh
        vals[k - 1] = total  # after adding 1/k the total is l_{k-1}
    return vals


def harmonic_sum_exact(n: int) -> Fraction:
    """l_n as an exact rational, the reference for the float sequence."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 0:
        raise ValueError(f"index must be a nonnegative int, got {n!r}")
    return sum((Fraction(1, k) for k in range(1, int(n) + 2)), Fraction(0))


@dataclass(frozen=True)
class LogWeights:
    """The weight sequence l_0..l_n; l_0 = 1 and strictly increasing."""

    n: int
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        if v.shape != (self.n + 1,):
            raise ValueError(f"values shape {v.shape} != ({self.n + 1},)")
        if v[0] != 1.0:
            raise ValueError("l_0 must equal 1")
        if np.any(np.diff(v) <= 0):
            raise ValueError("logarithmic weights must increase strictly")
        v = v.copy()
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    def __getitem__(self, k: int) -> float:
        return float(self.values[k])


def log_weights(n: int) -> LogWeights:
    """The sequence l_0..l_n packaged with its invariants checked."""
    return LogWeights(int(n), harmonic_values(n))


# --------------------------------------------------------------------------
# mean families


class MeanFamily(str, Enum):
    NORLUND_LOG_LINEAR = "NorlundLogLinear"
    NORLUND_LOG_STRONG = "NorlundLogStrong"
    RIESZ_LOG_STRONG = "RieszLogStrong"
    FEJER_STRONG = "FejerStrong"


STRONG_FAMILIES = (
    MeanFamily.NORLUND_LOG_STRONG,
    MeanFamily.RIESZ_LOG_STRONG,
    MeanFamily.FEJER_STRONG,
)


@dataclass(frozen=True)
class MeanKind:
    """A mean family plus the conjugation pattern and optional centering.

    ``center`` (a sampled field on the same grid, or None) is subtracted
    from every ladder sum before the absolute value in strong means; with
    ``center = f`` the mean measures strong approximation error.
    """

    family: MeanFamily
    flag: ConjugacyFlag = ConjugacyFlag()
    center: object = None

    def __post_init__(self):
        if not isinstance(self.family, MeanFamily):
            raise ValueError(f"family must be a MeanFamily member, got {self.family!r}")
        if not isinstance(self.flag, ConjugacyFlag):
            raise ValueError(f"flag must be a ConjugacyFlag, got {self.flag!r}")


def _axis_weights(family: MeanFamily, n: int) -> np.ndarray:
    """Per-axis strong weights of length n+1, summing to 1."""
    idx = np.arange(n + 1, dtype=np.float64)
    if family is MeanFamily.NORLUND_LOG_STRONG:
        return 1.0 / ((n - idx + 1.0) * harmonic_sum(n))
    if family is MeanFamily.RIESZ_LOG_STRONG:
        return 1.0 / ((idx + 1.0) * harmonic_sum(n))
    if family is MeanFamily.FEJER_STRONG:
        return np.full(n + 1, 1.0 / (n + 1.0))
    raise ValueError(f"{family.value} has no strong axis weights")


def _check_degree(value, axis: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 0:
        raise ValueError(f"degree along {axis} must be a nonnegative int, got {value!r}")
    return int(value)


def norlund_log_mean(spectrum: SpectralField, n: int, m: int) -> SampledField:
    """The linear logarithmic mean t_{n,m}, evaluated on the grid.

    Computed in frequency space: exchanging the ladder and frequency sums
    turns the mean into the multiplier l_{n-|j|} l_{m-|k|} / (l_n l_m) on
    the coefficient box.
    """
    n = _check_degree(n, "x")
    m = _check_degree(m, "y")
    lx = harmonic_values(n)
    ly = harmonic_values(m)
    js = np.abs(np.arange(-n, n + 1))
    ks = np.abs(np.arange(-m, m + 1))
    mult = np.outer(lx[n - js] / lx[n], ly[m - ks] / ly[m])
    box = windowed_box(spectrum, n, m) * mult
    return synthesize_box(spectrum.grid, box)


def strong_mean(spectrum: SpectralField, n: int, m: int, kind: MeanKind) -> SampledField:
    """Strong (absolute-value) logarithmic mean over the ladder (i,j) <= (n,m).

    Returns sum of wx[i] wy[j] |S~_{i,j} - center| with the family's
    weights, where S~ carries the conjugation pattern of ``kind.flag``.
    """
    if kind.family not in STRONG_FAMILIES:
        raise ValueError(f"{kind.family.value} is not a strong family")
    n = _check_degree(n, "x")
    m = _check_degree(m, "y")
    grid = spectrum.grid
    center = None
    if kind.center is not None:
        if not isinstance(kind.center, SampledField):
            raise ValueError("center must be a SampledField on the same grid")
        if kind.center.grid != grid:
            raise ValueError("center grid does not match the spectrum grid")
        center = kind.center.values
    box = windowed_box(spectrum, n, m, kind.flag)
    ex, ey = exp_tables(grid, n, m)
    out = backend.strong_mean_sum(
        box, ex, ey, _axis_weights(kind.family, n), _axis_weights(kind.family, m), center
    )
    return SampledField(grid, out.astype(np.complex128))


def strong_mean_1d(spectrum: CircleSpectrum, n: int, kind: MeanKind) -> CircleField:
    """One-variable strong mean over the ladder k <= n.

    Only the first flag component applies; ``kind.flag.b`` must be 0.
    ``kind.center`` may be a CircleField on the same grid.
    """
    if kind.family not in STRONG_FAMILIES:
        raise ValueError(f"{kind.family.value} is not a strong family")
    if kind.flag.b != 0:
        raise ValueError("one-variable means use only flag component a; b must be 0")
    n = _check_degree(n, "x")
    if n > spectrum.m:
        raise TruncationError(f"degree {n} exceeds stored half-width {spectrum.m}")
    grid = spectrum.grid
    center = np.zeros(grid.n, dtype=np.complex128)
    if kind.center is not None:
        if not isinstance(kind.center, CircleField) or kind.center.grid != grid:
            raise ValueError("center must be a CircleField on the same grid")
        center = kind.center.values
    w = _axis_weights(kind.family, n)
    coeffs = (
        spectrum.coeffs[spectrum.m - n : spectrum.m + n + 1]
        * axis_window(n, bool(kind.flag.a), False)
    )
    ek = np.exp(1j * np.outer(np.arange(-n, n + 1), grid.xs))
    out = np.zeros(grid.n, dtype=np.float64)
    acc = np.zeros(grid.n, dtype=np.complex128)
    for k in range(n + 1):
        if k == 0:
            acc += coeffs[n] * ek[n]
        else:
            acc += coeffs[n + k] * ek[n + k] + coeffs[n - k] * ek[n - k]
        out += w[k] * np.abs(acc - center)
    return CircleField(grid, out.astype(np.complex128))


# --------------------------------------------------------------------------
# the summation-by-parts identity


@dataclass(frozen=True)
class ResidualReport:
    """Sup-norm and L2-norm of an identity residual field."""

    sup: float
    l2: float


def _hardy_chunk_residual(chunk: np.ndarray):
    """Prefix machinery for one spatial chunk of the ladder table.

    ``chunk[i, j, p]`` holds |S~_{i,j}| at chunk point p. Returns a
    callable giving the residual slice for any (n, m) >= (1, 1).
    """
    kmax, lmax = chunk.shape[0] - 1, chunk.shape[1] - 1
    ii = np.arange(kmax + 1, dtype=np.float64)[:, None, None]
    jj = np.arange(lmax + 1, dtype=np.float64)[None, :, None]
    left = (chunk / ((ii + 1.0) * (jj + 1.0))).cumsum(axis=0).cumsum(axis=1)
    flat = chunk.cumsum(axis=0).cumsum(axis=1) / ((ii + 1.0) * (jj + 1.0))
    interior = (flat / ((ii + 2.0) * (jj + 2.0))).cumsum(axis=0).cumsum(axis=1)
    edge_i = (flat / (ii + 2.0)).cumsum(axis=0)
    edge_j = (flat / (jj + 2.0)).cumsum(axis=1)

    def residual(n: int, m: int) -> np.ndarray:
        rhs = interior[n - 1, m - 1] + edge_i[n - 1, m] + edge_j[n, m - 1] + flat[n, m]
        return left[n, m] - rhs

    return residual


#: spatial points prefixed at once; bounds live memory near 100 MB at degree 16
_HARDY_CHUNK = 8192


def _ladder_table_flat(
    spectrum: SpectralField, n: int, m: int, flag: ConjugacyFlag
) -> np.ndarray:
    box = windowed_box(spectrum, n, m, flag)
    ex, ey = exp_tables(spectrum.grid, n, m)
    table = backend.abs_partial_sum_table(box, ex, ey, None)
    return table.reshape(n + 1, m + 1, -1)


def hardy_identity_residual(
    spectrum: SpectralField, n: int, m: int, flag: ConjugacyFlag = ConjugacyFlag()
) -> ResidualReport:
    """Residual of the summation-by-parts rearrangement at degrees (n, m).

    The left side is the Riesz-weighted sum of |S~_{i,j}| over the ladder
    (i, j) <= (n, m); the right side rewrites it through flat ladder
    averages: an interior double sum with weights 1/((i+2)(j+2)), two edge
    sums, and the corner average. Requires n, m >= 1. The residual is
    evaluated at every grid node; its sup and L2 norms are returned.
    """
    if n < 1 or m < 1:
        raise ValueError("the rearrangement needs degrees n, m >= 1")
    n, m = int(n), int(m)
    table = _ladder_table_flat(spectrum, n, m, flag)
    sup = 0.0
    sqsum = 0.0
    for start in range(0, table.shape[2], _HARDY_CHUNK):
        res = _hardy_chunk_residual(table[:, :, start : start + _HARDY_CHUNK])(n, m)
        sup = max(sup, float(np.max(np.abs(res))))
        sqsum += float(np.sum(res * res))
    g = spectrum.grid
    return ResidualReport(sup=sup, l2=float(np.sqrt(g.hx * g.hy * sqsum)))


def hardy_residual_sweep(
    spectrum: SpectralField, nmax: int, mmax: int, flag: ConjugacyFlag = ConjugacyFlag()
) -> np.ndarray:
    """Sup residuals for every 1 <= n <= nmax, 1 <= m <= mmax at once.

    Shares one ladder table across all (n, m) and prefixes it in spatial
    chunks; entry [n, m] is the sup residual, with NaN padding at n = 0 or
    m = 0 where the identity is not stated.
    """
    if nmax < 1 or mmax < 1:
        raise ValueError("the rearrangement needs degrees n, m >= 1")
    table = _ladder_table_flat(spectrum, int(nmax), int(mmax), flag)
    sup = np.zeros((nmax + 1, mmax + 1))
    for start in range(0, table.shape[2], _HARDY_CHUNK):
        residual = _hardy_chunk_residual(table[:, :, start : start + _HARDY_CHUNK])
        for n in range(1, nmax + 1):
            for m in range(1, mmax + 1):
                sup[n, m] = max(sup[n, m], float(np.max(np.abs(residual(n, m)))))
    out = np.full((nmax + 1, mmax + 1), np.nan)
    out[1:, 1:] = sup[1:, 1:]
    return out


# --------------------------------------------------------------------------
# modulation decompositions


def _modulators_1d(xs: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.sin((n + 1.0) * xs), np.cos((n + 1.0) * xs)


def decomposition_residual_1d(spectrum: CircleSpectrum, n: int, k: int) -> float:
    """Sup residual of the one-variable modulation identity.

    Checks, on the grid, that S_{n-k}(f) equals

        -a_n * conj_k(f b_n) + b_n * conj_k(f a_n)
        - b_n * plain_k(f b_n) - a_n * plain_k(f a_n) + halved_{n+1}(f)

    with a_n = sin((n+1)x), b_n = cos((n+1)x), conj/plain the conjugate and
    plain partial sums, and halved the edge-halved sum. The working cutoff
    must hold the modulated products: 2*(m_f + n + 1) < grid size, else
    :class:`CutoffError`.
    """
    n = _check_degree(n, "x")
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k!r}")
    k = int(k)
    grid = spectrum.grid
    cutoff = spectrum.m + n + 1
    if 2 * cutoff >= grid.n:
        raise CutoffError(
            f"cutoff {cutoff} for the modulated products needs 2*{cutoff} < {grid.n} nodes"
        )
    f = circle_synthesize(grid, spectrum.coeffs)
    a, b = _modulators_1d(grid.xs, n)
    spec_f = circle_coefficients(f, cutoff)
    spec_fb = circle_coefficients(CircleField(grid, f.values * b), cutoff)
    spec_fa = circle_coefficients(CircleField(grid, f.values * a), cutoff)
    lhs = circle_partial_sum(spec_f, n - k).values
    rhs = (
        -a * circle_partial_sum(spec_fb, k, conjugate=True).values
        + b * circle_partial_sum(spec_fa, k, conjugate=True).values
        - b * circle_partial_sum(spec_fb, k).values
        - a * circle_partial_sum(spec_fa, k).values
        + circle_partial_sum(spec_f, n + 1, modified=True).values
    )
    return float(np.max(np.abs(lhs - rhs)))


@dataclass(frozen=True)
class Residual2D:
    """Sup residuals of the two two-variable checks."""

    factorization_sup: float
    expansion_sup: float


def decomposition_residual_2d(spectrum: SpectralField, n: int, m: int) -> Residual2D:
    """Sup residuals of the tensor factorization and the mixed-term expansion.

    For every (i, j) <= (n, m) two statements are checked on the grid:

    - factorization: S_{n-i, m-j}(f) equals the one-variable modulation
      identity in x applied to the resampled field S^y_{m-j}(f);
    - expansion: the first mixed remainder term
      I_1 = -a_n(x) conj^x_i(b_n(x) S^y_{m-j}(f)) equals its five-term
      form in fully two-variable operators applied to modulated copies
      of f, the last term pairing a conjugate x-cutoff with an edge-halved
      y-cutoff of order m+1.

    Intermediate fields are synthesized on the grid and re-analyzed, so the
    checks exercise the full transform round trip rather than cancelling
    symbolically. Requires working cutoffs 2*(mx+n+1) < nx and
    2*(my+m+1) < ny, else :class:`CutoffError`.
    """
    n = _check_degree(n, "x")
    m = _check_degree(m, "y")
    grid = spectrum.grid
    big_x = spectrum.mx + n + 1
    big_y = spectrum.my + m + 1
    if 2 * big_x >= grid.nx or 2 * big_y >= grid.ny:
        raise CutoffError(
            f"cutoffs ({big_x}, {big_y}) for the modulated products need "
            f"2*cutoff < ({grid.nx}, {grid.ny}) nodes"
        )
    fvals = synthesize_box(grid, spectrum.coeffs).values
    X, Y = grid.meshes()
    ax, bx = np.sin((n + 1.0) * X), np.cos((n + 1.0) * X)
    ay, by = np.sin((m + 1.0) * Y), np.cos((m + 1.0) * Y)

    def analyze(values, mx, my):
        return coefficients(SampledField(grid, values), mx, my)

    spec_f = analyze(fvals, big_x, big_y)
    spec_bb = analyze(fvals * bx * by, big_x, big_y)
    spec_ba = analyze(fvals * bx * ay, big_x, big_y)
    spec_b = analyze(fvals * bx, big_x, big_y)

    c11 = ConjugacyFlag(1, 1)
    c10 = ConjugacyFlag(1, 0)

    def op(spec, i, j, flag=ConjugacyFlag(), modx=False, mody=False):
        return synthesize_box(grid, windowed_box(spec, i, j, flag, modx, mody)).values

    fact_sup = 0.0
    exp_sup = 0.0
    for j in range(m + 1):
        ty = op(spec_f, big_x, m - j)  # S^y_{m-j}(f) with x content untouched
        spec_t = analyze(ty, big_x, big_y)
        spec_tb = analyze(ty * bx, big_x, big_y)
        spec_ta = analyze(ty * ax, big_x, big_y)
        halved = op(spec_t, n + 1, big_y, modx=True)
        for i in range(n + 1):
            conj_tb = op(spec_tb, i, big_y, c10)
            lhs = op(spec_f, n - i, m - j)
            rhs = (
                -ax * conj_tb
                + bx * op(spec_ta, i, big_y, c10)
                - bx * op(spec_tb, i, big_y)
                - ax * op(spec_ta, i, big_y)
                + halved
            )
            fact_sup = max(fact_sup, float(np.max(np.abs(lhs - rhs))))

            mixed = -ax * conj_tb
            five = (
                ax * ay * op(spec_bb, i, j, c11)
                - ax * by * op(spec_ba, i, j, c11)
                + ax * by * op(spec_bb, i, j, c10)
                + ax * ay * op(spec_ba, i, j, c10)
                - ax * op(spec_b, i, m + 1, c10, mody=True)
            )
            exp_sup = max(exp_sup, float(np.max(np.abs(mixed - five))))
    return Residual2D(factorization_sup=fact_sup, expansion_sup=exp_sup)
