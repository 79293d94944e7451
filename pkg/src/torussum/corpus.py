"""Reference functions for sweeps and identity checks.

The default corpus spans the regimes the estimates care about: exact
trigonometric polynomials (where identities hold to rounding), a steep
tanh step standing in for a jump discontinuity, and integrable spike
functions whose |f| log+ |f| integral is genuinely large.

Seeded generators also produce the random trigonometric polynomials used
by the identity suite; coefficients always carry Hermitian symmetry so the
sampled fields are real.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

CLASS_TAGS = ("polynomial", "smooth", "discontinuous", "llogl_stress")

#: amplitude of the spike family min(cap, AMP / sqrt(|x| + |y|)); the
#: factor 2 keeps the |f| log+ |f| integral above 1 on the default grid
SPIKE_AMPLITUDE = 2.0


@dataclass(frozen=True)
class TestFunction:
    """A named evaluator with a regime tag and its parameters.

    ``evaluator`` takes coordinate arrays (broadcastable) and returns
    values; ``class_tag`` is one of polynomial, smooth, discontinuous,
    llogl_stress.
    """

    __test__ = False  # not a pytest class, despite the name

    id: str
    evaluator: Callable
    class_tag: str
    parameters: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.id or not isinstance(self.id, str):
            raise ValueError(f"function id must be a nonempty string, got {self.id!r}")
        if self.class_tag not in CLASS_TAGS:
            raise ValueError(
                f"class_tag {self.class_tag!r} not in {CLASS_TAGS}"
            )
        if not callable(self.evaluator):
            raise ValueError("evaluator must be callable")


def trig_evaluator(box: np.ndarray) -> Callable:
    """Pointwise evaluator of sum box[j+mx, k+my] e^{i(jx+ky)}.

    Works on arbitrary coordinate arrays, not just grid nodes.
    """
    box = np.asarray(box, dtype=np.complex128)
    mx = (box.shape[0] - 1) // 2
    my = (box.shape[1] - 1) // 2

    def evaluate(x, y):
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        ex = np.exp(1j * np.multiply.outer(np.arange(-mx, mx + 1), x))
        ey = np.exp(1j * np.multiply.outer(np.arange(-my, my + 1), y))
        return np.einsum("jk,j...,k...->...", box, ex, ey)

    return evaluate


def random_trig_polynomial(rng: np.random.Generator, degx: int, degy: int) -> np.ndarray:
    """A random Hermitian coefficient box of half-widths (degx, degy).

    Entries are complex Gaussians symmetrized so the synthesized field is
    real; scaled so typical field values are O(1).
    """
    shape = (2 * degx + 1, 2 * degy + 1)
    raw = rng.normal(size=shape) + 1j * rng.normal(size=shape)
    box = 0.5 * (raw + np.conj(raw[::-1, ::-1]))
    return box / np.sqrt(box.size)


def random_trig_polynomial_1d(rng: np.random.Generator, deg: int) -> np.ndarray:
    """A random Hermitian coefficient line of half-width deg."""
    raw = rng.normal(size=2 * deg + 1) + 1j * rng.normal(size=2 * deg + 1)
    c = 0.5 * (raw + np.conj(raw[::-1]))
    return c / np.sqrt(c.size)


def _spike_evaluator(cap: float) -> Callable:
    def evaluate(x, y):
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        r = np.abs(x) + np.abs(y)
        with np.errstate(divide="ignore"):
            tail = SPIKE_AMPLITUDE / np.sqrt(r)
        return np.minimum(cap, tail)

    return evaluate


def default_corpus(seed: int) -> tuple[TestFunction, ...]:
    """The built-in seven-function corpus.

    ``seed`` fixes the coefficients of the random polynomial member; the
    other members are deterministic.
    """
    rng = np.random.default_rng(np.uint64(seed))
    poly_box = random_trig_polynomial(rng, 4, 4)
    steep = 10.0
    return (
        TestFunction("one", lambda x, y: np.ones(np.broadcast(x, y).shape), "polynomial"),
        TestFunction("cos_x", lambda x, y: np.cos(x) * np.ones_like(y), "polynomial"),
        TestFunction("cos_x_cos_y", lambda x, y: np.cos(x) * np.cos(y), "polynomial"),
        TestFunction(
            "poly4",
            trig_evaluator(poly_box),
            "polynomial",
            {"degx": 4, "degy": 4, "seed": int(seed)},
        ),
        TestFunction(
            "step",
            lambda x, y: np.tanh(steep * np.sin(x)) * np.tanh(steep * np.sin(y)),
            "discontinuous",
            {"steepness": steep},
        ),
        TestFunction("spike10", _spike_evaluator(10.0), "llogl_stress",
                     {"cap": 10.0, "amplitude": SPIKE_AMPLITUDE}),
        TestFunction("spike100", _spike_evaluator(100.0), "llogl_stress",
                     {"cap": 100.0, "amplitude": SPIKE_AMPLITUDE}),
    )


def polynomial_corpus_2d(
    seed: int, count: int = 10, max_degree: int = 8
) -> list[tuple[str, np.ndarray]]:
    """Seeded random 2-d polynomials: (id, coefficient box) pairs.

    Half-widths are drawn uniformly from 1..max_degree per axis.
    """
    rng = np.random.default_rng(np.uint64(seed) + 0x2D)
    out = []
    for i in range(count):
        degx = int(rng.integers(1, max_degree + 1))
        degy = int(rng.integers(1, max_degree + 1))
        out.append((f"rpoly2d_{i:02d}", random_trig_polynomial(rng, degx, degy)))
    return out


def polynomial_corpus_1d(
    seed: int, count: int = 10, max_degree: int = 4
) -> list[tuple[str, np.ndarray]]:
    """Seeded random 1-d polynomials: (id, coefficient line) pairs."""
    rng = np.random.default_rng(np.uint64(seed) + 0x1D)
    out = []
    for i in range(count):
        deg = int(rng.integers(1, max_degree + 1))
        out.append((f"rpoly1d_{i:02d}", random_trig_polynomial_1d(rng, deg)))
    return out
