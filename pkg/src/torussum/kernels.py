"""Closed-form summation kernels on the circle.

Four kernel families are provided:

- ``dirichlet``: sin((n + 1/2)u) / (2 sin(u/2)), the sharp-cutoff kernel;
- ``conjugate_dirichlet``: 1/(2 tan(u/2)) - cos((m+1)u) / (2 sin(u/2)),
  the conjugate-side companion used in pointwise estimates;
- ``modified_dirichlet``: sin(nu) / (2 tan(u/2)), the edge-halved cutoff,
  equal to the average of two consecutive sharp kernels;
- ``sine_kernel`` and ``modified_sine_kernel``: the imaginary parts of the
  sharp and edge-halved cutoffs, i.e. the convolution kernels that actually
  reproduce conjugate partial sums by quadrature.

Formulas are evaluated literally at the given argument. Inside the guard
band |sin(u/2)| < 1e-9 the quotient is replaced by a second-order series in
the reduced variable u - 2*pi*round(u/(2*pi)), so arguments landing exactly
on the removable singularity at u = 0 (mod 2*pi) are safe. Note that
``conjugate_dirichlet`` alone is not 2*pi-periodic (its cosine tail has
half-integer symmetry); its intended domain is the principal interval
[-pi, pi].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * np.pi

#: largest supported kernel order
MAX_ORDER = 1 << 20

#: guard band on |sin(u/2)| below which the series form is used
SING_GUARD = 1e-9

KERNEL_TAGS = ("Dirichlet", "ConjugateDirichlet", "ModifiedDirichlet")


def _check_order(n, least: int, what: str) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise ValueError(f"{what} order must be an integer, got {n!r}")
    n = int(n)
    if n < least:
        raise ValueError(f"{what} order must be >= {least}, got {n}")
    if n > MAX_ORDER:
        raise ValueError(f"{what} order {n} exceeds supported range {MAX_ORDER}")
    return n


def _prepare(u) -> tuple[np.ndarray, np.ndarray, np.ndarray, bool]:
    """Return (raw, reduced, near-singular mask, was-scalar)."""
    arr = np.asarray(u, dtype=np.float64)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    v = arr - TWO_PI * np.round(arr / TWO_PI)
    near = np.abs(np.sin(0.5 * arr)) < SING_GUARD
    return arr, v, near, scalar


def _emit(out: np.ndarray, scalar: bool):
    return float(out[0]) if scalar else out


def dirichlet(n: int, u):
    """Sharp-cutoff kernel of order n: sin((n+1/2)u) / (2 sin(u/2)).

    Value (n + 1/2) at u = 0. Accepts scalars or arrays.
    """
    n = _check_order(n, 0, "dirichlet")
    w, v, near, scalar = _prepare(u)
    a = n + 0.5
    with np.errstate(divide="ignore", invalid="ignore"):
        reg = np.sin(a * w) / (2.0 * np.sin(0.5 * w))
    ser = a + a * (1.0 - 4.0 * a * a) * v * v / 24.0
    return _emit(np.where(near, ser, reg), scalar)


def conjugate_dirichlet(m: int, u):
    """Conjugate companion kernel: 1/(2 tan(u/2)) - cos((m+1)u) / (2 sin(u/2)).

    Requires m >= 1; the order-0 member is excluded because the conjugate
    cutoff degenerates there. Odd in u, value 0 at u = 0, defined on the
    principal interval.
    """
    m = _check_order(m, 1, "conjugate dirichlet")
    w, v, near, scalar = _prepare(u)
    b = m + 1.0
    with np.errstate(divide="ignore", invalid="ignore"):
        reg = (np.cos(0.5 * w) - np.cos(b * w)) / (2.0 * np.sin(0.5 * w))
    ser = v * (0.5 * b * b - 0.125)
    return _emit(np.where(near, ser, reg), scalar)


def modified_dirichlet(n: int, u):
    """Edge-halved cutoff kernel: sin(nu) / (2 tan(u/2)).

    Value n at u = 0; identically zero for n = 0. Equals the average of the
    sharp kernels of orders n-1 and n.
    """
    n = _check_order(n, 0, "modified dirichlet")
    w, v, near, scalar = _prepare(u)
    with np.errstate(divide="ignore", invalid="ignore"):
        reg = np.sin(n * w) * np.cos(0.5 * w) / (2.0 * np.sin(0.5 * w))
    ser = n - v * v * n * (2.0 * n * n + 1.0) / 12.0
    return _emit(np.where(near, ser, reg), scalar)


def sine_kernel(n: int, u):
    """Conjugate convolution kernel: sum of sin(ku) for 1 <= k <= n.

    Closed form (cos(u/2) - cos((n+1/2)u)) / (2 sin(u/2)); odd, zero at
    u = 0, and genuinely 2*pi-periodic (unlike ``conjugate_dirichlet``,
    from which it differs by a cosine tail). This is the kernel whose
    normalized convolution against samples reproduces spectral conjugate
    partial sums.
    """
    n = _check_order(n, 0, "sine kernel")
    w, v, near, scalar = _prepare(u)
    if n == 0:
        return _emit(np.zeros_like(w), scalar)
    with np.errstate(divide="ignore", invalid="ignore"):
        reg = (np.cos(0.5 * w) - np.cos((n + 0.5) * w)) / (2.0 * np.sin(0.5 * w))
    t1 = 0.5 * n * (n + 1.0)
    ser = v * t1 - (v ** 3) * t1 * t1 / 6.0
    return _emit(np.where(near, ser, reg), scalar)


def modified_sine_kernel(n: int, u):
    """Edge-halved conjugate kernel: sum of sin(ku), k < n, plus sin(nu)/2.

    Closed form (1 - cos(nu)) / (2 tan(u/2)); odd, zero at u = 0. Requires
    n >= 1 to match the edge-halved cutoff it represents.
    """
    n = _check_order(n, 1, "modified sine kernel")
    w, v, near, scalar = _prepare(u)
    with np.errstate(divide="ignore", invalid="ignore"):
        reg = (1.0 - np.cos(n * w)) * np.cos(0.5 * w) / (2.0 * np.sin(0.5 * w))
    t1 = 0.5 * (n - 1.0) * n
    ser = v * (0.5 * n * n) - (v ** 3) * (t1 * t1 / 6.0 + n ** 3 / 12.0)
    return _emit(np.where(near, ser, reg), scalar)


@dataclass(frozen=True)
class KernelKind:
    """A (tag, order) pair naming one kernel instance.

    ``tag`` is one of ``Dirichlet``, ``ConjugateDirichlet``,
    ``ModifiedDirichlet``; ``order`` is an integer within [0, 2**20]
    (>= 1 for the conjugate tag).
    """

    tag: str
    order: int

    def __post_init__(self):
        if self.tag not in KERNEL_TAGS:
            raise ValueError(f"unknown kernel tag {self.tag!r}; use one of {KERNEL_TAGS}")
        least = 1 if self.tag == "ConjugateDirichlet" else 0
        object.__setattr__(self, "order", _check_order(self.order, least, self.tag))


def evaluate_kernel(kind: KernelKind, u):
    """Evaluate the kernel named by ``kind`` at ``u``."""
    if kind.tag == "Dirichlet":
        return dirichlet(kind.order, u)
    if kind.tag == "ConjugateDirichlet":
        return conjugate_dirichlet(kind.order, u)
    return modified_dirichlet(kind.order, u)
