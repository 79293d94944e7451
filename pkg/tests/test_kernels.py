import numpy as np
import pytest

from torussum import (
    KernelKind,
    MAX_ORDER,
    conjugate_dirichlet,
    dirichlet,
    evaluate_kernel,
    modified_dirichlet,
    modified_sine_kernel,
    sine_kernel,
)

# seeded scan points, kept away from nothing in particular: the guard band
# handles the removable singularities
_RNG = np.random.default_rng(192837)
POINTS = _RNG.uniform(-np.pi, np.pi, size=2000)


def test_dirichlet_reference_values():
    assert dirichlet(1, np.pi / 2) == pytest.approx(0.5, abs=1e-14)
    assert dirichlet(5, 0.0) == pytest.approx(5.5, abs=0.0)
    for n in range(7):
        assert dirichlet(n, 0.0) == n + 0.5


def test_conjugate_dirichlet_reference_values():
    assert conjugate_dirichlet(1, np.pi) == pytest.approx(-0.5, abs=1e-12)
    assert conjugate_dirichlet(2, np.pi / 2) == pytest.approx(0.5, abs=1e-12)
    assert conjugate_dirichlet(4, 0.0) == 0.0


def test_modified_dirichlet_reference_values():
    assert modified_dirichlet(3, 0.0) == pytest.approx(3.0, abs=0.0)
    assert modified_dirichlet(2, np.pi / 2) == pytest.approx(0.0, abs=1e-14)
    assert np.all(modified_dirichlet(0, POINTS) == 0.0)


@pytest.mark.parametrize("n", [1, 2, 7, 32, 64])
def test_dirichlet_matches_cosine_sum(n):
    """Closed form against the defining sum 1/2 + sum cos(ku)."""
    direct = 0.5 + sum(np.cos(k * POINTS) for k in range(1, n + 1))
    np.testing.assert_allclose(dirichlet(n, POINTS), direct, atol=1e-9)


@pytest.mark.parametrize("n", [1, 2, 7, 32, 64])
def test_sine_kernel_matches_sine_sum(n):
    direct = sum(np.sin(k * POINTS) for k in range(1, n + 1))
    np.testing.assert_allclose(sine_kernel(n, POINTS), direct, atol=1e-9)


@pytest.mark.parametrize("n", [1, 2, 7, 32, 64])
def test_modified_sine_kernel_matches_halved_sum(n):
    direct = sum(np.sin(k * POINTS) for k in range(1, n)) + 0.5 * np.sin(n * POINTS)
    np.testing.assert_allclose(modified_sine_kernel(n, POINTS), direct, atol=1e-9)


@pytest.mark.parametrize("n", [1, 3, 16, 64])
def test_modified_kernels_average_consecutive_sharp_ones(n):
    avg = 0.5 * (dirichlet(n - 1, POINTS) + dirichlet(n, POINTS))
    np.testing.assert_allclose(modified_dirichlet(n, POINTS), avg, atol=1e-12)
    avg_s = 0.5 * (sine_kernel(n - 1, POINTS) + sine_kernel(n, POINTS))
    np.testing.assert_allclose(modified_sine_kernel(n, POINTS), avg_s, atol=1e-12)


@pytest.mark.parametrize("n", [1, 2, 5, 17, 64])
def test_parity(n):
    np.testing.assert_allclose(dirichlet(n, -POINTS), dirichlet(n, POINTS), atol=1e-12)
    np.testing.assert_allclose(
        modified_dirichlet(n, -POINTS), modified_dirichlet(n, POINTS), atol=1e-12
    )
    np.testing.assert_allclose(
        conjugate_dirichlet(n, -POINTS), -conjugate_dirichlet(n, POINTS), atol=1e-12
    )
    np.testing.assert_allclose(sine_kernel(n, -POINTS), -sine_kernel(n, POINTS), atol=1e-12)
    np.testing.assert_allclose(
        modified_sine_kernel(n, -POINTS), -modified_sine_kernel(n, POINTS), atol=1e-12
    )


@pytest.mark.parametrize("fn", [dirichlet, modified_dirichlet, sine_kernel, modified_sine_kernel])
def test_periodic_kernels_are_periodic(fn):
    u = POINTS[np.abs(POINTS) > 0.1][:500]
    np.testing.assert_allclose(fn(6, u + 2 * np.pi), fn(6, u), atol=1e-10)
    np.testing.assert_allclose(fn(6, u - 4 * np.pi), fn(6, u), atol=1e-10)


def test_conjugate_cosine_tail_breaks_periodicity():
    # deliberate: the conjugate companion has half-integer symmetry, so it is
    # only meant for the principal interval
    u = np.pi / 3
    assert abs(conjugate_dirichlet(2, u + 2 * np.pi) - conjugate_dirichlet(2, u)) > 1.0


def test_series_branch_is_continuous_with_formula_branch():
    # the guard band is |sin(u/2)| < 1e-9, i.e. roughly |u| < 2e-9
    inside, outside = 1.9e-9, 2.1e-9
    for fn, scale in [
        (lambda u: dirichlet(12, u), 12.5),
        (lambda u: conjugate_dirichlet(12, u), 1.0),
        (lambda u: modified_dirichlet(12, u), 12.0),
        (lambda u: sine_kernel(12, u), 1.0),
        (lambda u: modified_sine_kernel(12, u), 1.0),
    ]:
        assert abs(fn(inside) - fn(outside)) < 1e-6 * scale


def test_series_branch_handles_exact_multiples_of_two_pi():
    assert dirichlet(3, 2 * np.pi) == pytest.approx(3.5, abs=1e-9)
    assert modified_dirichlet(4, -2 * np.pi) == pytest.approx(4.0, abs=1e-9)
    assert sine_kernel(5, 2 * np.pi) == pytest.approx(0.0, abs=1e-9)


def test_scalar_in_scalar_out():
    out = dirichlet(2, 0.25)
    assert isinstance(out, float)
    arr = dirichlet(2, np.array([0.25, 0.5]))
    assert isinstance(arr, np.ndarray) and arr.shape == (2,)


@pytest.mark.parametrize(
    "call",
    [
        lambda: dirichlet(-1, 0.0),
        lambda: dirichlet(1.0, 0.0),
        lambda: dirichlet(True, 0.0),
        lambda: dirichlet(MAX_ORDER + 1, 0.0),
        lambda: conjugate_dirichlet(0, 1.0),
        lambda: modified_sine_kernel(0, 1.0),
    ],
)
def test_order_validation(call):
    with pytest.raises(ValueError):
        call()


def test_kernel_kind_dispatch():
    assert evaluate_kernel(KernelKind("Dirichlet", 5), 0.0) == 5.5
    assert evaluate_kernel(KernelKind("ModifiedDirichlet", 3), 0.0) == 3.0
    assert evaluate_kernel(KernelKind("ConjugateDirichlet", 1), np.pi) == pytest.approx(
        -0.5, abs=1e-12
    )


def test_kernel_kind_validation():
    with pytest.raises(ValueError):
        KernelKind("Fejer", 1)
    with pytest.raises(ValueError):
        KernelKind("ConjugateDirichlet", 0)
    with pytest.raises(ValueError):
        KernelKind("Dirichlet", -2)
