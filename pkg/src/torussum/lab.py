"""Sweep drivers, their report format, and run configuration.

Four drivers back the command-line tool:

- ``run_identity_suite``: residuals of the exact identities (the
  summation-by-parts rearrangement on the full degree grid, both
  modulation decompositions) over seeded polynomial corpora;
- ``run_bound_sweep``: L^p size of the strong ladder means against the
  |f| log+ |f| modular, the ratio whose boundedness the estimates claim;
- ``run_convergence_sweep``: decay of strong and linear approximation
  errors in L^p and in measure along the degree schedule;
- ``dump_kernels``: raw kernel profiles for plotting.

Reports are flat row tables with a fixed schema and are written as CSV
with 17 significant digits and a one-line metadata header carrying the
tool version, the config hash, and the active backend, so identical
configurations reproduce byte-identical files.
"""

from __future__ import annotations

import hashlib
import importlib.metadata
import re
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .backend import backend_name
from .circle import CircleSpectrum, make_circle_grid
from .corpus import (
    TestFunction,
    default_corpus,
    polynomial_corpus_1d,
    polynomial_corpus_2d,
    random_trig_polynomial,
    trig_evaluator,
)
from .errors import TorusSumError
from .grid import SampledField, make_grid, sample
from .kernels import KERNEL_TAGS, KernelKind, evaluate_kernel
from .means import (
    MeanFamily,
    MeanKind,
    decomposition_residual_1d,
    decomposition_residual_2d,
    hardy_residual_sweep,
    norlund_log_mean,
    strong_mean,
)
from .norms import exceedance_measure, llogl_modular, lp_quasinorm
from .spectral import ConjugacyFlag, coefficients

try:
    TOOL_VERSION = importlib.metadata.version("torussum")
except importlib.metadata.PackageNotFoundError:  # running from a checkout
    TOOL_VERSION = "0.1.0"

#: residual threshold above which an identity row counts as a failure
IDENTITY_TOL = 1e-9

_CONFIG_KEYS = ("grid", "degrees", "p", "epsilon", "funcs", "out", "format", "seed")


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class LabConfig:
    """One run's worth of knobs, validated on construction.

    ``funcs`` is a tuple of corpus ids or ("all",). ``degrees`` is the
    ladder schedule; entries above grid/4 are not rejected here but turn
    into per-row errors when a driver reaches them.
    """

    grid: int = 256
    degrees: tuple = (4, 8, 16, 32, 64)
    p_values: tuple = (0.5, 0.75)
    epsilons: tuple = (0.1, 0.05)
    funcs: tuple = ("all",)
    out_dir: str = "out"
    out_format: str = "csv"
    seed: int = 1729

    def __post_init__(self):
        if (
            isinstance(self.grid, bool)
            or not isinstance(self.grid, (int, np.integer))
            or self.grid < 4
            or not _is_power_of_two(int(self.grid))
        ):
            raise ValueError(f"grid must be a power of two >= 4, got {self.grid!r}")
        object.__setattr__(self, "grid", int(self.grid))
        degs = tuple(int(d) for d in self.degrees)
        if not degs or any(d < 1 for d in degs) or list(degs) != sorted(set(degs)):
            raise ValueError(
                f"degrees must be strictly increasing integers >= 1, got {self.degrees!r}"
            )
        object.__setattr__(self, "degrees", degs)
        ps = tuple(float(p) for p in self.p_values)
        if not ps or any(not 0.0 < p <= 1.0 for p in ps):
            raise ValueError(f"p values must lie in (0, 1], got {self.p_values!r}")
        object.__setattr__(self, "p_values", ps)
        eps = tuple(float(e) for e in self.epsilons)
        if not eps or any(not e > 0.0 for e in eps):
            raise ValueError(f"epsilons must be positive, got {self.epsilons!r}")
        object.__setattr__(self, "epsilons", eps)
        fns = tuple(str(f) for f in self.funcs)
        if not fns:
            raise ValueError("funcs must not be empty")
        object.__setattr__(self, "funcs", fns)
        if self.out_format not in ("csv", "csv+plots"):
            raise ValueError(f"format must be csv or csv+plots, got {self.out_format!r}")
        if (
            isinstance(self.seed, bool)
            or not isinstance(self.seed, (int, np.integer))
            or not 0 <= int(self.seed) < 2**64
        ):
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        object.__setattr__(self, "seed", int(self.seed))

    def canonical_text(self) -> str:
        """Deterministic key=value rendering of the semantic fields."""
        parts = {
            "degrees": ",".join(str(d) for d in self.degrees),
            "epsilon": ",".join(format(e, ".17g") for e in self.epsilons),
            "format": self.out_format,
            "funcs": ",".join(self.funcs),
            "grid": str(self.grid),
            "p": ",".join(format(p, ".17g") for p in self.p_values),
            "seed": str(self.seed),
        }
        return "\n".join(f"{k}={v}" for k, v in sorted(parts.items()))

    def config_hash(self) -> str:
        return hashlib.sha256(self.canonical_text().encode()).hexdigest()[:12]


def _parse_int_list(text: str) -> tuple:
    return tuple(int(t) for t in text.split(",") if t.strip())


def _parse_float_list(text: str) -> tuple:
    return tuple(float(t) for t in text.split(",") if t.strip())


def config_from_file(path) -> dict:
    """Read flat key=value lines; '#' starts a comment, blanks are skipped."""
    values: dict = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if key not in _CONFIG_KEYS:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}; known: {_CONFIG_KEYS}")
        values[key] = val
    return values


def build_config(file_values: dict | None = None, **overrides) -> LabConfig:
    """Merge defaults, config-file values, and keyword overrides (strongest)."""
    cfg = LabConfig()
    if file_values:
        mapped = {}
        if "grid" in file_values:
            mapped["grid"] = int(file_values["grid"])
        if "degrees" in file_values:
            mapped["degrees"] = _parse_int_list(file_values["degrees"])
        if "p" in file_values:
            mapped["p_values"] = _parse_float_list(file_values["p"])
        if "epsilon" in file_values:
            mapped["epsilons"] = _parse_float_list(file_values["epsilon"])
        if "funcs" in file_values:
            mapped["funcs"] = tuple(
                t.strip() for t in file_values["funcs"].split(",") if t.strip()
            )
        if "out" in file_values:
            mapped["out_dir"] = file_values["out"]
        if "format" in file_values:
            mapped["out_format"] = file_values["format"]
        if "seed" in file_values:
            mapped["seed"] = int(file_values["seed"])
        cfg = replace(cfg, **mapped)
    clean = {k: v for k, v in overrides.items() if v is not None}
    if clean:
        cfg = replace(cfg, **clean)
    return cfg


# --------------------------------------------------------------------------
# report rows

CSV_COLUMNS = (
    "function_id",
    "n",
    "m",
    "param",
    "metric",
    "value",
    "grid_nx",
    "grid_ny",
    "status",
    "detail",
)


@dataclass(frozen=True)
class SweepRow:
    function_id: str
    n: int
    m: int
    param: str
    metric: str
    value: float
    grid_nx: int
    grid_ny: int
    status: str = "ok"
    detail: str = ""


class SweepReport:
    """An append-only row table with key uniqueness enforced."""

    def __init__(self, kind: str, config: LabConfig):
        self.kind = kind
        self.config = config
        self.rows: list[SweepRow] = []
        self._keys: set = set()

    def add(self, row: SweepRow) -> None:
        key = (row.function_id, row.n, row.m, row.param, row.metric)
        if key in self._keys:
            raise ValueError(f"duplicate report row key {key}")
        if row.status == "ok" and not np.isfinite(row.value):
            raise ValueError(f"non-finite value in ok row {key}: {row.value}")
        self._keys.add(key)
        self.rows.append(row)

    def ok(self, fid, n, m, param, metric, value) -> None:
        g = self.config.grid
        self.add(SweepRow(fid, int(n), int(m), param, metric, float(value), g, g))

    def error(self, fid, n, m, param, metric, exc: Exception) -> None:
        g = self.config.grid
        detail = f"{type(exc).__name__}: {exc}"
        self.add(
            SweepRow(fid, int(n), int(m), param, metric, float("nan"), g, g,
                     status="error", detail=detail)
        )

    @property
    def error_rows(self) -> list[SweepRow]:
        return [r for r in self.rows if r.status != "ok"]

    def values(self, metric: str) -> list[float]:
        return [r.value for r in self.rows if r.metric == metric and r.status == "ok"]

    def identity_failures(self, tol: float = IDENTITY_TOL) -> list[SweepRow]:
        return [r for r in self.rows if r.status == "ok" and r.value > tol]

    def metadata_line(self) -> str:
        return (
            f"# torussum {TOOL_VERSION} kind={self.kind} "
            f"config={self.config.config_hash()} backend={backend_name()}"
        )

    def write_csv(self, path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        lines = [self.metadata_line(), ",".join(CSV_COLUMNS)]
        for r in self.rows:
            val = format(r.value, ".17g") if np.isfinite(r.value) else "nan"
            detail = r.detail.replace(",", ";").replace("\n", " ")
            lines.append(
                f"{r.function_id},{r.n},{r.m},{r.param},{r.metric},{val},"
                f"{r.grid_nx},{r.grid_ny},{r.status},{detail}"
            )
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path


def _slug(text: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", text).strip("_") or "x"


def write_plots(report: SweepReport, out_dir) -> list[Path]:
    """One vector-graphics file per (function, metric, param) series.

    The x axis is the degree n on a log-2 scale; series with fewer than two
    points are skipped.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out = Path(out_dir) / "plots"
    out.mkdir(parents=True, exist_ok=True)
    series: dict = {}
    for r in report.rows:
        if r.status != "ok" or r.n < 1:
            continue
        series.setdefault((r.function_id, r.metric, r.param), []).append((r.n, r.value))
    written = []
    for (fid, metric, param), pts in sorted(series.items()):
        pts = sorted(set(pts))
        if len(pts) < 2:
            continue
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        fig, ax = plt.subplots(figsize=(5.0, 3.4))
        ax.plot(xs, ys, marker="o")
        ax.set_xscale("log", base=2)
        ax.set_xlabel("degree n")
        ax.set_ylabel(metric)
        title = f"{fid}: {metric}" + (f" ({param})" if param else "")
        ax.set_title(title, fontsize=10)
        ax.grid(True, alpha=0.3)
        fig.tight_layout()
        name = _slug(f"{report.kind}_{fid}_{metric}_{param}") + ".svg"
        target = out / name
        fig.savefig(target, format="svg", metadata={"Date": None})
        plt.close(fig)
        written.append(target)
    return written


# --------------------------------------------------------------------------
# corpus selection


def select_corpus(config: LabConfig) -> tuple[TestFunction, ...]:
    corpus = default_corpus(config.seed)
    if config.funcs == ("all",):
        return corpus
    known = {tf.id: tf for tf in corpus}
    missing = [f for f in config.funcs if f not in known]
    if missing:
        raise ValueError(f"unknown function ids {missing}; known: {sorted(known)}")
    return tuple(known[f] for f in config.funcs)


# --------------------------------------------------------------------------
# drivers


def run_identity_suite(config: LabConfig) -> SweepReport:
    """Residuals of every exact identity over seeded polynomial corpora.

    Emits one row per (identity, function, degrees); identities that cannot
    run at this grid (cutoff or aliasing limits) produce error rows instead
    of aborting the sweep.
    """
    report = SweepReport("identities", config)
    g = config.grid
    grid = make_grid(g, g)
    flags = [ConjugacyFlag(a, b) for a in (0, 1) for b in (0, 1)]
    nmax = min(16, max(config.degrees))

    for fid, box in polynomial_corpus_2d(config.seed):
        degx = (box.shape[0] - 1) // 2
        degy = (box.shape[1] - 1) // 2
        try:
            fld = sample(trig_evaluator(box), grid)
            spec = coefficients(fld, max(nmax, degx), max(nmax, degy))
        except TorusSumError as exc:
            for flag in flags:
                report.error(fid, nmax, nmax, "", f"hardy_sup_flag{flag.a}{flag.b}", exc)
            spec = None
        if spec is None:
            continue
        for flag in flags:
            metric = f"hardy_sup_flag{flag.a}{flag.b}"
            try:
                sweep = hardy_residual_sweep(spec, nmax, nmax, flag)
            except TorusSumError as exc:
                report.error(fid, nmax, nmax, "", metric, exc)
                continue
            for n in range(1, nmax + 1):
                for m in range(1, nmax + 1):
                    report.ok(fid, n, m, "", metric, sweep[n, m])

    cgrid = make_circle_grid(g)
    for fid, line in polynomial_corpus_1d(config.seed):
        deg = (line.shape[0] - 1) // 2
        spec1 = CircleSpectrum(cgrid, deg, line)
        for n in range(0, 7):
            try:
                worst = max(
                    decomposition_residual_1d(spec1, n, k) for k in range(n + 1)
                )
            except TorusSumError as exc:
                report.error(fid, n, 0, "", "decomp1d_sup", exc)
                continue
            report.ok(fid, n, 0, "", "decomp1d_sup", worst)

    rng = np.random.default_rng(np.uint64(config.seed) + 0x33)
    for i in range(5):
        fid = f"rpoly33_{i:02d}"
        box = random_trig_polynomial(rng, 3, 3)
        try:
            fld = sample(trig_evaluator(box), grid)
            spec = coefficients(fld, 3, 3)
            res = decomposition_residual_2d(spec, 4, 4)
        except TorusSumError as exc:
            report.error(fid, 4, 4, "", "decomp2d_factorization_sup", exc)
            report.error(fid, 4, 4, "", "decomp2d_expansion_sup", exc)
            continue
        report.ok(fid, 4, 4, "", "decomp2d_factorization_sup", res.factorization_sup)
        report.ok(fid, 4, 4, "", "decomp2d_expansion_sup", res.expansion_sup)
    return report


def _analysis_cutoff(config: LabConfig) -> int:
    return min(max(config.degrees), config.grid // 4)


def run_bound_sweep(config: LabConfig) -> SweepReport:
    """L^p size of the plain strong ladder mean against the modular bound.

    For each corpus function and schedule degree the driver reports the
    quasinorm of the strong ladder mean, its ratio to
    (|f| log+ |f| modular + 1), and the running maximum of that ratio.
    Exponents must satisfy 0 < p < 1 here.
    """
    for p in config.p_values:
        if not 0.0 < p < 1.0:
            raise ValueError(f"bound sweep needs exponents strictly inside (0,1), got {p}")
    report = SweepReport("bound_sweep", config)
    g = config.grid
    grid = make_grid(g, g)
    cutoff = _analysis_cutoff(config)
    kind = MeanKind(MeanFamily.NORLUND_LOG_STRONG)
    for tf in select_corpus(config):
        fld = sample(tf.evaluator, grid)
        denom = llogl_modular(fld) + 1.0
        report.ok(tf.id, 0, 0, "", "llogl_modular", denom - 1.0)
        spec = coefficients(fld, cutoff, cutoff)
        running = {p: 0.0 for p in config.p_values}
        for n in config.degrees:
            if n > g // 4:
                for p in config.p_values:
                    report.error(
                        tf.id, n, n, f"p={p!r}", "strong_norlund_lp",
                        ValueError(f"degree {n} exceeds grid/4 = {g // 4}"),
                    )
                continue
            tau = strong_mean(spec, n, n, kind)
            for p in config.p_values:
                param = f"p={p!r}"
                q = lp_quasinorm(tau, p)
                ratio = q / denom
                running[p] = max(running[p], ratio)
                report.ok(tf.id, n, n, param, "strong_norlund_lp", q)
                report.ok(tf.id, n, n, param, "bound_ratio", ratio)
                report.ok(tf.id, n, n, param, "bound_ratio_running_max", running[p])
    return report


def run_convergence_sweep(config: LabConfig) -> SweepReport:
    """Approximation-error decay in L^p and in measure along the schedule.

    Strong errors use the ladder mean centered at f; linear errors use the
    frequency-space linear mean minus f. On every cell the pointwise
    domination of the linear error by the strong error mean is asserted
    before any row is written.
    """
    report = SweepReport("converge_sweep", config)
    g = config.grid
    grid = make_grid(g, g)
    cutoff = _analysis_cutoff(config)
    for tf in select_corpus(config):
        fld = sample(tf.evaluator, grid)
        spec = coefficients(fld, cutoff, cutoff)
        kind_err = MeanKind(MeanFamily.NORLUND_LOG_STRONG, center=fld)
        exceed_series: dict = {}
        for n in config.degrees:
            if n > g // 4:
                report.error(
                    tf.id, n, n, "", "strong_error_lp",
                    ValueError(f"degree {n} exceeds grid/4 = {g // 4}"),
                )
                continue
            strong_err = strong_mean(spec, n, n, kind_err)
            linear = norlund_log_mean(spec, n, n)
            lin_err_vals = np.abs(linear.values - fld.values)
            dom = strong_err.values.real + 1e-12
            if not np.all(lin_err_vals <= dom):
                worst = float(np.max(lin_err_vals - dom))
                raise RuntimeError(
                    "pointwise domination of the linear error by the strong "
                    f"error mean failed by {worst:.3e}; this is a bug"
                )
            lin_err = SampledField(grid, lin_err_vals.astype(np.complex128))
            for p in config.p_values:
                param = f"p={p!r}"
                report.ok(tf.id, n, n, param, "strong_error_lp",
                          lp_quasinorm(strong_err, p))
                report.ok(tf.id, n, n, param, "linear_error_lp",
                          lp_quasinorm(lin_err, p))
            for eps in config.epsilons:
                param = f"eps={eps!r}"
                se = exceedance_measure(strong_err, eps).measure
                le = exceedance_measure(lin_err, eps).measure
                report.ok(tf.id, n, n, param, "strong_error_exceedance", se)
                report.ok(tf.id, n, n, param, "linear_error_exceedance", le)
                exceed_series.setdefault(eps, []).append(le)
        for eps, vals in exceed_series.items():
            if len(vals) >= 2 and vals[0] > 0:
                report.ok(
                    tf.id, 0, 0, f"eps={eps!r}",
                    "linear_error_exceedance_final_over_initial",
                    vals[-1] / vals[0],
                )
    return report


def dump_kernels(config: LabConfig, out_dir=None) -> Path:
    """Write kernel profiles over a uniform scan of [-pi, pi) including 0.

    One CSV with columns kernel,order,u,value; orders come from the degree
    schedule and the scan has ``config.grid`` points.
    """
    out = Path(out_dir if out_dir is not None else config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    us = -np.pi + 2.0 * np.pi * np.arange(config.grid) / config.grid
    lines = [
        f"# torussum {TOOL_VERSION} kind=kernels config={config.config_hash()} "
        f"backend={backend_name()}",
        "kernel,order,u,value",
    ]
    for tag in KERNEL_TAGS:
        for order in config.degrees:
            vals = evaluate_kernel(KernelKind(tag, int(order)), us)
            for u, v in zip(us, vals):
                lines.append(f"{tag},{order},{u:.17g},{v:.17g}")
    path = out / "kernels.csv"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
