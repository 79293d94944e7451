"""Double Fourier series summability on the torus.

Rectangular partial sums and their conjugates, logarithmic strong means,
the exact identities connecting them, Orlicz-type size functionals, and a
small lab for sweeping numerical bounds. See the README for the layout.
"""

__version__ = "0.1.0"

from .backend import backend_name
from .circle import (
    CircleField,
    CircleGrid,
    CircleSpectrum,
    circle_coefficients,
    circle_partial_sum,
    circle_quad,
    circle_synthesize,
    make_circle_grid,
    sample_circle,
)
from .errors import (
    AliasingError,
    CutoffError,
    DivergenceError,
    ResolutionError,
    SamplingError,
    SizingError,
    TorusSumError,
    TruncationError,
)
from .grid import FULL_MEASURE, SampledField, TorusGrid, make_grid, quad_integral, sample
from .kernels import (
    KernelKind,
    MAX_ORDER,
    conjugate_dirichlet,
    dirichlet,
    evaluate_kernel,
    modified_dirichlet,
    modified_sine_kernel,
    sine_kernel,
)
from .lab import (
    IDENTITY_TOL,
    LabConfig,
    SweepReport,
    SweepRow,
    build_config,
    dump_kernels,
    run_bound_sweep,
    run_convergence_sweep,
    run_identity_suite,
    select_corpus,
    write_plots,
)
from .corpus import (
    TestFunction,
    default_corpus,
    polynomial_corpus_1d,
    polynomial_corpus_2d,
    random_trig_polynomial,
    trig_evaluator,
)
from .means import (
    LogWeights,
    MeanFamily,
    MeanKind,
    Residual2D,
    ResidualReport,
    decomposition_residual_1d,
    decomposition_residual_2d,
    hardy_identity_residual,
    hardy_residual_sweep,
    harmonic_sum,
    harmonic_sum_exact,
    harmonic_values,
    log_weights,
    norlund_log_mean,
    strong_mean,
    strong_mean_1d,
)
from .norms import (
    ExceedanceReport,
    U_LOG_PLUS_U,
    YoungFunction,
    exceedance_measure,
    llogl_modular,
    lp_quasinorm,
    luxemburg_norm,
    orlicz_modular,
)
from .spectral import (
    ConjugacyFlag,
    SpectralField,
    coefficients,
    conjugate_partial_sum,
    exp_tables,
    modified_partial_sum,
    oracle_partial_sum,
    partial_sum,
    synthesize_box,
    windowed_box,
)

__all__ = [name for name in dir() if not name.startswith("_")]
