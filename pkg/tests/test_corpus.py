import numpy as np
import pytest

from torussum import (
    TestFunction,
    default_corpus,
    llogl_modular,
    make_grid,
    polynomial_corpus_1d,
    polynomial_corpus_2d,
    random_trig_polynomial,
    sample,
    synthesize_box,
    trig_evaluator,
)
from torussum.corpus import CLASS_TAGS


def test_default_corpus_members():
    corpus = default_corpus(1729)
    ids = [tf.id for tf in corpus]
    assert ids == ["one", "cos_x", "cos_x_cos_y", "poly4", "step", "spike10", "spike100"]
    for tf in corpus:
        assert tf.class_tag in CLASS_TAGS
    by_id = {tf.id: tf for tf in corpus}
    assert by_id["step"].class_tag == "discontinuous"
    assert by_id["spike10"].class_tag == "llogl_stress"
    assert by_id["spike100"].class_tag == "llogl_stress"


def test_stress_members_have_large_modular_on_the_default_grid():
    """The llogl_stress tag is a promise: modular >= 1 at 256 nodes per axis."""
    g = make_grid(256, 256)
    for tf in default_corpus(1729):
        if tf.class_tag != "llogl_stress":
            continue
        assert llogl_modular(sample(tf.evaluator, g)) >= 1.0
    # frozen values for the two spike members
    by_id = {tf.id: tf for tf in default_corpus(1729)}
    assert llogl_modular(sample(by_id["spike10"].evaluator, g)) == pytest.approx(
        14.072885351980464, rel=1e-12
    )
    assert llogl_modular(sample(by_id["spike100"].evaluator, g)) == pytest.approx(
        14.359286394520488, rel=1e-12
    )


def test_spike_cap_and_finiteness():
    g = make_grid(64, 64)  # the node (0, 0) is on this grid
    by_id = {tf.id: tf for tf in default_corpus(1)}
    vals = sample(by_id["spike10"].evaluator, g).values.real
    assert vals.max() == 10.0
    assert np.isfinite(vals).all()
    assert by_id["spike10"].parameters["cap"] == 10.0


def test_corpus_is_seed_reproducible():
    a = {tf.id: tf for tf in default_corpus(42)}
    b = {tf.id: tf for tf in default_corpus(42)}
    g = make_grid(32, 32)
    np.testing.assert_array_equal(
        sample(a["poly4"].evaluator, g).values, sample(b["poly4"].evaluator, g).values
    )
    c = {tf.id: tf for tf in default_corpus(43)}
    assert not np.array_equal(
        sample(a["poly4"].evaluator, g).values, sample(c["poly4"].evaluator, g).values
    )


def test_trig_evaluator_agrees_with_grid_synthesis():
    rng = np.random.default_rng(3)
    box = rng.normal(size=(5, 7)) + 1j * rng.normal(size=(5, 7))
    g = make_grid(32, 32)
    X, Y = g.meshes()
    direct = trig_evaluator(box)(X, Y)
    fld = synthesize_box(g, box)
    np.testing.assert_allclose(direct, fld.values, atol=1e-12)


def test_random_polynomials_are_real_valued():
    rng = np.random.default_rng(55)
    box = random_trig_polynomial(rng, 4, 6)
    assert box.shape == (9, 13)
    np.testing.assert_allclose(box, np.conj(box[::-1, ::-1]), atol=0.0)
    g = make_grid(32, 32)
    fld = sample(trig_evaluator(box), g)
    assert np.max(np.abs(fld.values.imag)) < 1e-13


def test_polynomial_corpora_shapes_and_determinism():
    polys = polynomial_corpus_2d(7, count=10, max_degree=8)
    assert [fid for fid, _ in polys] == [f"rpoly2d_{i:02d}" for i in range(10)]
    for _, box in polys:
        assert box.ndim == 2
        assert box.shape[0] % 2 == 1 and box.shape[1] % 2 == 1
        assert 3 <= box.shape[0] <= 17 and 3 <= box.shape[1] <= 17
    again = polynomial_corpus_2d(7, count=10, max_degree=8)
    for (_, b1), (_, b2) in zip(polys, again):
        np.testing.assert_array_equal(b1, b2)

    lines = polynomial_corpus_1d(7, count=10, max_degree=4)
    assert [fid for fid, _ in lines] == [f"rpoly1d_{i:02d}" for i in range(10)]
    for _, line in lines:
        assert line.ndim == 1 and line.shape[0] % 2 == 1
        assert 3 <= line.shape[0] <= 9
        np.testing.assert_allclose(line, np.conj(line[::-1]), atol=0.0)


def test_test_function_validation():
    with pytest.raises(ValueError):
        TestFunction("", lambda x, y: x, "smooth")
    with pytest.raises(ValueError):
        TestFunction("f", lambda x, y: x, "weird_tag")
    with pytest.raises(ValueError):
        TestFunction("f", 3.0, "smooth")
