import numpy as np
import pytest

from torussum import (
    AliasingError,
    ConjugacyFlag,
    ResolutionError,
    SampledField,
    SizingError,
    TruncationError,
    coefficients,
    conjugate_partial_sum,
    exp_tables,
    make_grid,
    modified_partial_sum,
    oracle_partial_sum,
    partial_sum,
    random_trig_polynomial,
    sample,
    synthesize_box,
    trig_evaluator,
    windowed_box,
)

ALL_FLAGS = [ConjugacyFlag(a, b) for a in (0, 1) for b in (0, 1)]


def _random_field(grid, degx, degy, seed):
    box = random_trig_polynomial(np.random.default_rng(seed), degx, degy)
    return sample(trig_evaluator(box), grid), box


def test_synthesis_analysis_roundtrip():
    g = make_grid(32, 16)
    rng = np.random.default_rng(3)
    box = rng.normal(size=(7, 5)) + 1j * rng.normal(size=(7, 5))
    fld = synthesize_box(g, box)
    spec = coefficients(fld, 3, 2)
    np.testing.assert_allclose(spec.coeffs, box, atol=1e-13)


def test_coefficient_accessor():
    g = make_grid(32, 32)
    fld = sample(lambda x, y: np.cos(x) * np.cos(2 * y), g)
    spec = coefficients(fld, 2, 3)
    assert spec.coefficient(1, 2) == pytest.approx(0.25, abs=1e-14)
    assert spec.coefficient(-1, -2) == pytest.approx(0.25, abs=1e-14)
    assert abs(spec.coefficient(1, 1)) < 1e-14
    with pytest.raises(TruncationError):
        spec.coefficient(3, 0)


def test_real_fields_have_hermitian_coefficients():
    g = make_grid(64, 64)
    fld, _ = _random_field(g, 6, 4, seed=41)
    assert np.max(np.abs(fld.values.imag)) < 1e-12
    spec = coefficients(fld, 6, 4)
    c = spec.coeffs
    np.testing.assert_allclose(c, np.conj(c[::-1, ::-1]), atol=1e-12)


def test_partial_sum_linearity():
    g = make_grid(32, 32)
    f1, _ = _random_field(g, 3, 3, seed=1)
    f2, _ = _random_field(g, 3, 3, seed=2)
    combo = SampledField(g, 2.0 * f1.values - 0.5j * f2.values)
    s_combo = partial_sum(coefficients(combo, 3, 3), 2, 1)
    s1 = partial_sum(coefficients(f1, 3, 3), 2, 1)
    s2 = partial_sum(coefficients(f2, 3, 3), 2, 1)
    np.testing.assert_allclose(
        s_combo.values, 2.0 * s1.values - 0.5j * s2.values, atol=1e-12
    )


def test_partial_sum_idempotence():
    g = make_grid(32, 32)
    fld, _ = _random_field(g, 5, 5, seed=9)
    spec = coefficients(fld, 5, 5)
    once = partial_sum(spec, 3, 2)
    twice = partial_sum(coefficients(once, 5, 5), 3, 2)
    np.testing.assert_allclose(twice.values, once.values, atol=1e-10)


def test_full_window_partial_sum_reproduces_the_field():
    g = make_grid(32, 32)
    fld, _ = _random_field(g, 4, 6, seed=13)
    spec = coefficients(fld, 4, 6)
    np.testing.assert_allclose(partial_sum(spec, 4, 6).values, fld.values, atol=1e-12)


def test_flag_zero_conjugate_is_bitwise_the_plain_sum():
    g = make_grid(32, 32)
    fld, _ = _random_field(g, 4, 4, seed=17)
    spec = coefficients(fld, 4, 4)
    plain = partial_sum(spec, 3, 2)
    flagged = conjugate_partial_sum(spec, 3, 2, ConjugacyFlag(0, 0))
    assert np.array_equal(plain.values, flagged.values)


def test_conjugate_axis_of_order_zero_gives_zero():
    g = make_grid(16, 16)
    fld = sample(lambda x, y: np.cos(x) * np.cos(y), g)
    spec = coefficients(fld, 2, 2)
    assert np.all(conjugate_partial_sum(spec, 0, 2, ConjugacyFlag(1, 0)).values == 0.0)
    assert np.all(conjugate_partial_sum(spec, 2, 0, ConjugacyFlag(0, 1)).values == 0.0)


def test_conjugate_rotations_on_product_cosines():
    g = make_grid(32, 32)
    X, Y = g.meshes()
    fld = sample(lambda x, y: np.cos(x) * np.cos(y), g)
    spec = coefficients(fld, 1, 1)
    half_x = conjugate_partial_sum(spec, 1, 1, ConjugacyFlag(1, 0))
    np.testing.assert_allclose(half_x.values, np.sin(X) * np.cos(Y), atol=1e-13)
    both = conjugate_partial_sum(spec, 1, 1, ConjugacyFlag(1, 1))
    np.testing.assert_allclose(both.values, np.sin(X) * np.sin(Y), atol=1e-13)


def test_double_conjugation_negates_zero_mean_directions():
    """Applying the x-conjugacy twice is -1 on fields with no j = 0 modes."""
    g = make_grid(32, 32)
    rng = np.random.default_rng(29)
    box = random_trig_polynomial(rng, 4, 4)
    box[4, :] = 0.0  # kill the j = 0 row
    fld = sample(trig_evaluator(box), g)
    spec = coefficients(fld, 4, 4)
    once = conjugate_partial_sum(spec, 4, 4, ConjugacyFlag(1, 0))
    twice = conjugate_partial_sum(coefficients(once, 4, 4), 4, 4, ConjugacyFlag(1, 0))
    np.testing.assert_allclose(twice.values, -partial_sum(spec, 4, 4).values, atol=1e-12)


def test_modified_truncation_halves_edge_frequencies():
    g = make_grid(32, 32)
    X, Y = g.meshes()
    fld = sample(lambda x, y: np.cos(2 * x) * np.cos(y), g)
    spec = coefficients(fld, 3, 3)
    out = modified_partial_sum(spec, 2, 1)
    np.testing.assert_allclose(out.values, 0.25 * np.cos(2 * X) * np.cos(Y), atol=1e-13)
    # one sharp axis, one halved axis
    out_x = modified_partial_sum(spec, 2, 1, modified_x=True, modified_y=False)
    np.testing.assert_allclose(out_x.values, 0.5 * np.cos(2 * X) * np.cos(Y), atol=1e-13)


def test_windowed_box_shape_and_weights():
    g = make_grid(32, 32)
    fld = sample(lambda x, y: np.cos(x) * np.cos(y), g)
    spec = coefficients(fld, 2, 2)
    box = windowed_box(spec, 1, 1, ConjugacyFlag(0, 0))
    assert box.shape == (3, 3)
    assert box[2, 2] == pytest.approx(0.25, abs=1e-14)


def test_exp_tables_index_convention():
    g = make_grid(8, 16)
    ex, ey = exp_tables(g, 2, 3)
    assert ex.shape == (5, 8) and ey.shape == (7, 16)
    np.testing.assert_allclose(ex[2 + 2, :], np.exp(2j * g.xs), atol=1e-15)
    np.testing.assert_allclose(ey[3 - 1, :], np.exp(-1j * g.ys), atol=1e-15)


@pytest.mark.parametrize("flag", ALL_FLAGS)
def test_oracle_agrees_with_spectral_route(flag):
    """The quadrature oracle and the multiplier route must coincide."""
    g = make_grid(64, 64)
    fld, _ = _random_field(g, 8, 8, seed=101)
    spec = coefficients(fld, 8, 8)
    spectral = conjugate_partial_sum(spec, 5, 7, flag)
    oracle = oracle_partial_sum(fld, 5, 7, flag)
    assert np.max(np.abs(spectral.values - oracle.values)) < 1e-8


@pytest.mark.parametrize("mx,my", [(True, False), (False, True), (True, True)])
def test_oracle_agrees_on_modified_axes(mx, my):
    g = make_grid(64, 64)
    fld, _ = _random_field(g, 8, 8, seed=103)
    spec = coefficients(fld, 8, 8)
    spectral = modified_partial_sum(spec, 5, 7, modified_x=mx, modified_y=my)
    oracle = oracle_partial_sum(fld, 5, 7, modified_x=mx, modified_y=my)
    assert np.max(np.abs(spectral.values - oracle.values)) < 1e-8


def test_oracle_conjugate_modified_combination():
    g = make_grid(64, 64)
    fld, _ = _random_field(g, 6, 6, seed=107)
    spec = coefficients(fld, 6, 6)
    flag = ConjugacyFlag(1, 0)
    spectral = modified_partial_sum(spec, 4, 5, modified_x=True, modified_y=True, flag=flag)
    oracle = oracle_partial_sum(fld, 4, 5, flag=flag, modified_x=True, modified_y=True)
    assert np.max(np.abs(spectral.values - oracle.values)) < 1e-8


def test_oracle_needs_enough_nodes_per_order():
    g = make_grid(8, 8)
    fld = sample(lambda x, y: np.cos(x), g)
    oracle_partial_sum(fld, 1, 1)  # 4*(1+1) = 8 nodes: just enough
    with pytest.raises(ResolutionError):
        oracle_partial_sum(fld, 2, 1)


def test_error_taxonomy():
    g = make_grid(16, 16)
    fld = sample(lambda x, y: np.cos(x), g)
    with pytest.raises(AliasingError):
        coefficients(fld, 8, 2)
    with pytest.raises(ValueError):
        coefficients(fld, -1, 2)
    spec = coefficients(fld, 3, 3)
    with pytest.raises(TruncationError):
        windowed_box(spec, 4, 1, ConjugacyFlag(0, 0))
    with pytest.raises(TruncationError):
        partial_sum(spec, 1, 4)
    with pytest.raises(ValueError):
        modified_partial_sum(spec, 0, 2)  # modified needs degree >= 1
    with pytest.raises(SizingError):
        synthesize_box(g, np.zeros((4, 5)))
    with pytest.raises(AliasingError):
        synthesize_box(g, np.zeros((17, 3)))
    with pytest.raises(ValueError):
        ConjugacyFlag(2, 0)
    with pytest.raises(ValueError):
        ConjugacyFlag(0, -1)
