"""Size functionals on sampled fields.

Everything here reduces a :class:`~torussum.grid.SampledField` to one
number through the rectangle rule: L^p quasinorms for 0 < p <= 1 (the
regime of interest; p > 1 is accepted for diagnostics), the modular
integral of |f| log+ |f|, the induced Luxemburg norm found by bisection,
and distribution-function probes (the measure of {|f| > eps}).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DivergenceError
from .grid import FULL_MEASURE, SampledField

#: bracket cap for the Luxemburg bisection
_BRACKET_CAP = 1e18
#: relative width at which the bisection stops
_BISECT_RTOL = 1e-10


def log_plus(u) -> np.ndarray:
    """log+ u: natural logarithm above 1, zero at or below 1."""
    u = np.asarray(u, dtype=np.float64)
    out = np.zeros_like(u)
    mask = u > 1.0
    out[mask] = np.log(u[mask])
    return out


@dataclass(frozen=True)
class YoungFunction:
    """A convex gauge Q on [0, inf) with Q(0) = 0.

    Spot checks on construction: Q(0) = 0 and the ratio Q(u)/u does not
    decrease between u = 1e-6 and u = 1e6 (the ordering that makes the
    induced norm monotone in Q).
    """

    label: str
    fn: Callable[[np.ndarray], np.ndarray]

    def __post_init__(self):
        zero = float(np.asarray(self.fn(np.asarray(0.0))))
        if zero != 0.0:
            raise ValueError(f"Young function {self.label!r} has Q(0) = {zero}, not 0")
        lo, hi = 1e-6, 1e6
        rlo = float(np.asarray(self.fn(np.asarray(lo)))) / lo
        rhi = float(np.asarray(self.fn(np.asarray(hi)))) / hi
        if rlo > rhi:
            raise ValueError(
                f"Young function {self.label!r} fails the ratio ordering: "
                f"Q(u)/u drops from {rlo:.3g} at u=1e-6 to {rhi:.3g} at u=1e6"
            )

    def __call__(self, u) -> np.ndarray:
        return np.asarray(self.fn(np.abs(np.asarray(u))), dtype=np.float64)


#: the gauge u log+ u behind the L log L space
U_LOG_PLUS_U = YoungFunction("u_log_plus_u", lambda u: u * log_plus(u))


def _cell(field: SampledField) -> float:
    return field.grid.hx * field.grid.hy


def lp_quasinorm(field: SampledField, p: float) -> float:
    """(integral of |f|^p)^(1/p) by the rectangle rule.

    Requires p > 0. The intended range is 0 < p <= 1 where this is a
    quasinorm; larger p is accepted for diagnostic comparisons.
    """
    p = float(p)
    if not p > 0:
        raise ValueError(f"exponent must be positive, got {p}")
    total = _cell(field) * float(np.sum(np.abs(field.values) ** p))
    return float(total ** (1.0 / p))


def llogl_modular(field: SampledField) -> float:
    """Integral of |f| log+ |f| (natural logarithm) by the rectangle rule."""
    a = np.abs(field.values)
    return _cell(field) * float(np.sum(a * log_plus(a)))


def orlicz_modular(field: SampledField, young: YoungFunction, scale: float) -> float:
    """Integral of Q(|f| / scale) by the rectangle rule."""
    if not scale > 0:
        raise ValueError(f"scale must be positive, got {scale}")
    return _cell(field) * float(np.sum(young(np.abs(field.values) / scale)))


def luxemburg_norm(field: SampledField, young: YoungFunction = U_LOG_PLUS_U) -> float:
    """The Luxemburg norm: inf of k > 0 with modular Q(|f|/k) at most 1.

    Located by bracket expansion and bisection to relative width 1e-10.
    The returned k satisfies modular(k) <= 1 while modular(k*(1 - 1e-8))
    exceeds 1. Returns 0 for the zero field; raises
    :class:`DivergenceError` if no admissible k exists below 1e18.
    """
    vmax = float(np.max(np.abs(field.values)))
    if vmax == 0.0:
        return 0.0

    def modular(k: float) -> float:
        return orlicz_modular(field, young, k)

    hi = vmax
    while modular(hi) > 1.0:
        hi *= 2.0
        if hi > _BRACKET_CAP:
            raise DivergenceError(
                f"no scale below {_BRACKET_CAP:.0e} brings the modular under 1"
            )
    lo = 0.5 * hi
    while modular(lo) <= 1.0:
        hi = lo
        lo *= 0.5
        if lo < vmax * 1e-300:
            # modular stays <= 1 arbitrarily close to 0: the norm is 0
            return 0.0
    while hi - lo > _BISECT_RTOL * hi:
        mid = 0.5 * (lo + hi)
        if modular(mid) <= 1.0:
            hi = mid
        else:
            lo = mid
    return float(hi)


@dataclass(frozen=True)
class ExceedanceReport:
    """Size of a level set {|f| > threshold} on the grid.

    ``node_fraction`` is the share of grid nodes strictly above the
    threshold; ``measure`` scales it by the torus measure 4*pi^2.
    """

    threshold: float
    node_fraction: float
    measure: float


def exceedance_measure(field: SampledField, epsilon: float) -> ExceedanceReport:
    """Measure of {|f| > epsilon} by node counting (strict inequality)."""
    epsilon = float(epsilon)
    if not epsilon > 0:
        raise ValueError(f"threshold must be positive, got {epsilon}")
    frac = float(np.count_nonzero(np.abs(field.values) > epsilon)) / field.values.size
    return ExceedanceReport(
        threshold=epsilon, node_fraction=frac, measure=frac * FULL_MEASURE
    )
