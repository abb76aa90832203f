"""Command-line front end.

Subcommands:
  sweep      1-D or 2-D sweep over (lambda, detuning), CSV/JSON output
  threshold  lambda_c / lambda_th / P_th report at one detuning
  validate   time-domain relaxation cross-check of the analytic steady state
  preset     bundled figure-data grids (fig2: gain curve, fig3: N_b curve)

Exit codes: 0 success, 2 config or spec error, 3 numerical singularity
(non-sweep commands), 4 validation failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import sweep as sweep_mod
from .config import load_params, paper_config_path
from .errors import (
    BracketError,
    ConfigError,
    DomainError,
    NoMinimumError,
    SingularPointError,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SINGULAR = 3
EXIT_VALIDATION = 4


def _add_config_arg(sub):
    sub.add_argument(
        "--config",
        default=None,
        help="parameter config file (default: bundled paper preset)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superlase",
        description="Semiclassical superradiance-driven phonon laser calculator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="sweep lambda and/or detuning")
    _add_config_arg(p_sweep)
    p_sweep.add_argument("--var", choices=["lambda", "detuning", "both"], default="lambda")
    p_sweep.add_argument("--lambda-min", type=float)
    p_sweep.add_argument("--lambda-max", type=float)
    p_sweep.add_argument("--lambda-points", type=int)
    p_sweep.add_argument("--detuning-min", type=float)
    p_sweep.add_argument("--detuning-max", type=float)
    p_sweep.add_argument("--detuning-points", type=int)
    p_sweep.add_argument("--lambda", dest="fixed_lambda", type=float,
                         help="fixed coupling (rad/s) for detuning sweeps")
    p_sweep.add_argument("--detuning", dest="fixed_detuning", type=float,
                         help="fixed detuning (rad/s); default from config")
    p_sweep.add_argument("--spacing", choices=["linear", "log"], default="linear")
    p_sweep.add_argument("--format", choices=["csv", "json"], default="csv")
    p_sweep.add_argument("--output", required=True)

    p_thr = sub.add_parser("threshold", help="lasing threshold report")
    _add_config_arg(p_thr)
    p_thr.add_argument("--detuning", type=float, default=None,
                       help="override detuning (rad/s)")
    p_thr.add_argument("--json", dest="json_out", default=None,
                       help="also write the report as JSON to this path")

    p_val = sub.add_parser("validate", help="dynamics vs analytic steady state")
    _add_config_arg(p_val)
    p_val.add_argument("--coupling", type=float, required=True,
                       help="atom-photon coupling lambda (rad/s)")
    p_val.add_argument("--perturbation", type=float, default=1e-4)
    p_val.add_argument("--t-max", type=float, default=None, help="seconds")

    p_pre = sub.add_parser("preset", help="reproduce the figure-data grids")
    p_pre.add_argument("name", choices=["fig2", "fig3"])
    _add_config_arg(p_pre)
    p_pre.add_argument("--format", choices=["csv", "json"], default="csv")
    p_pre.add_argument("--output", required=True)
    return parser


def _load(args):
    path = args.config if args.config else paper_config_path()
    return load_params(path)


def _range(args, prefix):
    lo = getattr(args, f"{prefix}_min")
    hi = getattr(args, f"{prefix}_max")
    points = getattr(args, f"{prefix}_points")
    if lo is None and hi is None and points is None:
        return None
    if lo is None or hi is None or points is None:
        raise DomainError(
            f"--{prefix}-min/--{prefix}-max/--{prefix}-points must be given together"
        )
    return (lo, hi, points)


def cmd_sweep(args) -> int:
    raw = _load(args)
    spec = sweep_mod.SweepSpec(
        variable=args.var,
        lambda_range=_range(args, "lambda"),
        detuning_range=_range(args, "detuning"),
        fixed_lambda=args.fixed_lambda,
        fixed_detuning=(
            args.fixed_detuning
            if args.fixed_detuning is not None
            else raw.pump_cavity_detuning
        ),
        spacing=args.spacing,
        output_format=args.format,
    )
    rows = sweep_mod.run_sweep(raw, spec)
    sweep_mod.write_rows(rows, args.output, spec.output_format)
    print(f"wrote {len(rows)} rows to {args.output}")
    return EXIT_OK


def cmd_threshold(args) -> int:
    raw = _load(args)
    report = sweep_mod.report_threshold(raw, args.detuning)
    print("threshold report")
    print(f"  detuning        = {report['detuning_rad_per_s']:.6e} rad/s")
    print(f"  lambda_c        = {report['lambda_c_rad_per_s']:.6e} rad/s")
    print(f"  lambda_th       = {report['lambda_th_rad_per_s']:.6e} rad/s")
    print(f"  P_th            = {report['P_th_watt']:.6e} W")
    print(f"  delta_n(th)     = {report['delta_n_at_threshold']:.6e}")
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    return EXIT_OK


def cmd_validate(args) -> int:
    raw = _load(args)
    report = sweep_mod.validate_dynamics(
        raw, args.coupling, perturbation=args.perturbation, t_max=args.t_max
    )
    status = "PASS" if report["passed"] else "FAIL"
    print(f"dynamics validation: {status}")
    for key in (
        "lambda_rad_per_s", "lambda_c_rad_per_s", "phase", "residual",
        "conservation_drift", "window_change", "converged_window",
        "t_final_s", "steps_accepted", "steps_rejected",
        "photons2_numeric", "photons2_analytic",
    ):
        print(f"  {key} = {report[key]}")
    return EXIT_OK if report["passed"] else EXIT_VALIDATION


def cmd_preset(args) -> int:
    raw = _load(args)
    spec = sweep_mod.preset_spec(raw, output_format=args.format)
    rows = sweep_mod.run_sweep(raw, spec)
    sweep_mod.write_rows(rows, args.output, spec.output_format)
    column = "G_per_s" if args.name == "fig2" else "N_b"
    print(f"wrote {len(rows)} rows to {args.output} ({args.name}: column {column})")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "sweep": cmd_sweep,
        "threshold": cmd_threshold,
        "validate": cmd_validate,
        "preset": cmd_preset,
    }
    try:
        return handlers[args.command](args)
    except (ConfigError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (SingularPointError, NoMinimumError, BracketError) as exc:
        print(f"numerical singularity: {exc}", file=sys.stderr)
        if isinstance(exc, BracketError) and exc.f_lo is not None:
            print(
                f"  G - gamma_m at bracket endpoints: {exc.f_lo:g}, {exc.f_hi:g}",
                file=sys.stderr,
            )
        return EXIT_SINGULAR


if __name__ == "__main__":
    raise SystemExit(main())
