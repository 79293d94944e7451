"""Command-line front end.

Four subcommands map onto the lab drivers:

- ``torussum identities``: run the exact-identity residual suite; exits
  nonzero if any residual exceeds 1e-9 or any cell errored;
- ``torussum bound-sweep``: quasinorm-to-modular ratios of the strong
  ladder means;
- ``torussum converge-sweep``: error decay in L^p and in measure;
- ``torussum kernels-dump``: kernel profiles as CSV.

Flags may also come from a flat key=value config file (--config); explicit
flags win over the file, which wins over built-in defaults.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import TorusSumError
from .lab import (
    IDENTITY_TOL,
    LabConfig,
    SweepReport,
    build_config,
    config_from_file,
    dump_kernels,
    run_bound_sweep,
    run_convergence_sweep,
    run_identity_suite,
    write_plots,
)


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--grid", type=int, default=None,
                     help="nodes per axis (power of two >= 4; default 256)")
    sub.add_argument("--degrees", type=str, default=None,
                     help="comma-separated ladder schedule (default 4,8,16,32,64)")
    sub.add_argument("--p", type=str, default=None,
                     help="comma-separated L^p exponents (default 0.5,0.75)")
    sub.add_argument("--epsilon", type=str, default=None,
                     help="comma-separated level-set thresholds (default 0.1,0.05)")
    sub.add_argument("--funcs", type=str, default=None,
                     help="comma-separated corpus ids, or 'all' (default all)")
    sub.add_argument("--out", type=str, default=None,
                     help="output directory (default ./out)")
    sub.add_argument("--format", type=str, default=None, choices=["csv", "csv+plots"],
                     help="csv only, or csv plus SVG plots")
    sub.add_argument("--seed", type=int, default=None,
                     help="unsigned 64-bit seed for the random corpora (default 1729)")
    sub.add_argument("--config", type=str, default=None,
                     help="flat key=value config file; flags override it")


def _parse_list(text, caster):
    if text is None:
        return None
    return tuple(caster(t) for t in text.split(",") if t.strip())


def _config_from_args(args: argparse.Namespace) -> LabConfig:
    file_values = config_from_file(args.config) if args.config else None
    funcs = None
    if args.funcs is not None:
        funcs = tuple(t.strip() for t in args.funcs.split(",") if t.strip())
    return build_config(
        file_values,
        grid=args.grid,
        degrees=_parse_list(args.degrees, int),
        p_values=_parse_list(args.p, float),
        epsilons=_parse_list(args.epsilon, float),
        funcs=funcs,
        out_dir=args.out,
        out_format=args.format,
        seed=args.seed,
    )


def _emit(report: SweepReport, config: LabConfig, csv_name: str) -> int:
    out = Path(config.out_dir)
    path = report.write_csv(out / csv_name)
    print(f"wrote {path} ({len(report.rows)} rows)")
    if config.out_format == "csv+plots":
        plots = write_plots(report, out)
        print(f"wrote {len(plots)} plots under {out / 'plots'}")
    errors = report.error_rows
    if errors:
        for r in errors[:10]:
            print(f"error: {r.function_id} {r.metric} n={r.n} m={r.m}: {r.detail}",
                  file=sys.stderr)
        if len(errors) > 10:
            print(f"... and {len(errors) - 10} more error rows", file=sys.stderr)
        return 1
    return 0


def _cmd_identities(args) -> int:
    config = _config_from_args(args)
    report = run_identity_suite(config)
    status = _emit(report, config, "identities.csv")
    failures = report.identity_failures(IDENTITY_TOL)
    if failures:
        worst = max(failures, key=lambda r: r.value)
        print(
            f"FAIL: {len(failures)} residuals above {IDENTITY_TOL:g}; worst "
            f"{worst.value:.3e} ({worst.function_id} {worst.metric} n={worst.n} m={worst.m})",
            file=sys.stderr,
        )
        return 1
    ok_rows = [r for r in report.rows if r.status == "ok"]
    if ok_rows:
        print(f"all {len(ok_rows)} identity residuals at or below {IDENTITY_TOL:g}")
    return status


def _cmd_bound(args) -> int:
    config = _config_from_args(args)
    report = run_bound_sweep(config)
    return _emit(report, config, "bound_sweep.csv")


def _cmd_converge(args) -> int:
    config = _config_from_args(args)
    report = run_convergence_sweep(config)
    return _emit(report, config, "converge_sweep.csv")


def _cmd_kernels(args) -> int:
    config = _config_from_args(args)
    path = dump_kernels(config, config.out_dir)
    print(f"wrote {path}")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="torussum",
        description="Double Fourier series summability probes on the torus",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    handlers = {
        "identities": _cmd_identities,
        "bound-sweep": _cmd_bound,
        "converge-sweep": _cmd_converge,
        "kernels-dump": _cmd_kernels,
    }
    helps = {
        "identities": "verify the exact algebraic identities to 1e-9",
        "bound-sweep": "quasinorm vs modular ratios for strong ladder means",
        "converge-sweep": "error decay in L^p and in measure",
        "kernels-dump": "write kernel profiles as CSV",
    }
    for name, fn in handlers.items():
        sub = subs.add_parser(name, help=helps[name])
        _add_common(sub)
        sub.set_defaults(handler=fn)
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (TorusSumError, ValueError, OSError) as exc:
        print(f"torussum: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
