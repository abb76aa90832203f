"""Parameter sweeps over (lambda, detuning) and the report/validate drivers.

Grid points are independent pure evaluations; they are computed on a
thread pool (capped by the SUPERLASE_THREADS env var, 0 = auto) and
gathered back into input order, so output files are byte-identical
across runs and thread counts.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import gain as gain_mod
from .dicke import critical_coupling, intracavity_photons, steady_state
from .dynamics import relax_to_steady
from .errors import DomainError, SingularPointError
from .params import RawParams, derive, with_detuning

CSV_HEADER = (
    "lambda_rad_per_s,detuning_rad_per_s,lambda_c_rad_per_s,phase,"
    "photons2,delta_n,G0_per_s,G1_per_s,G_per_s,N_b,P_watt"
)
_COLUMNS = CSV_HEADER.split(",")


@dataclass(frozen=True)
class SweepSpec:
    """What to sweep and how to write it out."""

    variable: str  # "lambda" | "detuning" | "both"
    lambda_range: tuple[float, float, int] | None = None
    detuning_range: tuple[float, float, int] | None = None
    fixed_lambda: float | None = None
    fixed_detuning: float | None = None
    spacing: str = "linear"  # "linear" | "log"
    output_format: str = "csv"  # "csv" | "json"

    def __post_init__(self):
        if self.variable not in ("lambda", "detuning", "both"):
            raise DomainError(f"unknown sweep variable {self.variable!r}")
        if self.spacing not in ("linear", "log"):
            raise DomainError(f"unknown spacing {self.spacing!r}")
        if self.output_format not in ("csv", "json"):
            raise DomainError(f"unknown format {self.output_format!r}")
        if self.variable in ("lambda", "both"):
            self._check_range("lambda_range", self.lambda_range)
        if self.variable in ("detuning", "both"):
            self._check_range("detuning_range", self.detuning_range)

    def _check_range(self, name, rng):
        if rng is None:
            raise DomainError(f"{name} is required for variable={self.variable!r}")
        lo, hi, points = rng
        if not lo < hi:
            raise DomainError(f"{name}: min must be < max, got [{lo:g}, {hi:g}]")
        if points < 2:
            raise DomainError(f"{name}: points must be >= 2, got {points}")
        if self.spacing == "log" and lo <= 0.0:
            raise DomainError(f"{name}: log spacing requires min > 0")


@dataclass(frozen=True)
class SweepRow:
    lam: float
    detuning: float
    lambda_c: float
    phase: str
    photons2: float
    delta_n: float
    g0: float
    g1: float
    gain: float
    n_b: float
    power: float

    def values(self):
        return (
            self.lam, self.detuning, self.lambda_c, self.phase,
            self.photons2, self.delta_n, self.g0, self.g1, self.gain,
            self.n_b, self.power,
        )

    def as_dict(self):
        return dict(zip(_COLUMNS, self.values()))


def _grid(rng, spacing):
    lo, hi, points = rng
    if spacing == "log":
        return np.geomspace(lo, hi, points)
    return np.linspace(lo, hi, points)


def _evaluate_point(raw: RawParams, lam: float, detuning: float) -> SweepRow:
    p = derive(with_detuning(raw, detuning))
    nan = float("nan")
    try:
        lam_c = critical_coupling(p)
    except SingularPointError:
        return SweepRow(lam, detuning, nan, "Singular", nan, nan, nan, nan, nan, nan, nan)
    phase = steady_state(p, lam).phase.value
    gb = gain_mod.mechanical_gain(p, lam)
    photons = intracavity_photons(p, lam)
    power = gain_mod.pump_power(lam, p)
    return SweepRow(
        lam, detuning, lam_c, phase, photons, gb.delta_n,
        gb.g0_term, gb.g1_term, gb.gain, gb.n_b, power,
    )


def worker_count() -> int:
    """Thread count from SUPERLASE_THREADS (unset or 0 = auto)."""
    value = os.environ.get("SUPERLASE_THREADS", "0")
    try:
        n = int(value)
    except ValueError:
        raise DomainError(f"SUPERLASE_THREADS must be an integer, got {value!r}")
    if n < 0:
        raise DomainError(f"SUPERLASE_THREADS must be >= 0, got {n}")
    return n if n > 0 else (os.cpu_count() or 1)


def run_sweep(raw: RawParams, spec: SweepSpec) -> list[SweepRow]:
    """Evaluate the params -> dicke -> gain pipeline on the sweep grid.

    Rows are ordered by the sweep variable ascending (detuning-major for
    2-D sweeps). Singular detunings yield flagged rows, not an abort.
    """
    if spec.variable == "lambda":
        if spec.fixed_detuning is None:
            raise DomainError("fixed_detuning is required for a lambda sweep")
        points = [(lam, spec.fixed_detuning) for lam in _grid(spec.lambda_range, spec.spacing)]
    elif spec.variable == "detuning":
        if spec.fixed_lambda is None:
            raise DomainError("fixed_lambda is required for a detuning sweep")
        points = [(spec.fixed_lambda, dc) for dc in _grid(spec.detuning_range, spec.spacing)]
    else:
        lams = _grid(spec.lambda_range, spec.spacing)
        dcs = _grid(spec.detuning_range, spec.spacing)
        points = [(lam, dc) for dc in dcs for lam in lams]

    n_workers = worker_count()
    if n_workers == 1:
        return [_evaluate_point(raw, lam, dc) for lam, dc in points]
    with ThreadPoolExecutor(max_workers=n_workers) as pool:
        return list(pool.map(lambda pt: _evaluate_point(raw, *pt), points))


def _fmt(x) -> str:
    if isinstance(x, str):
        return x
    x = float(x)
    if x != x:
        return "nan"
    return repr(x)


def write_rows(rows: list[SweepRow], path, output_format: str = "csv") -> None:
    """Emit rows as CSV (pinned header) or a JSON array of row objects."""
    if output_format == "json":
        payload = [
            {k: (None if isinstance(v, float) and v != v else v) for k, v in row.as_dict().items()}
            for row in rows
        ]
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(CSV_HEADER + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row.values()) + "\n")


def preset_spec(raw: RawParams, output_format: str = "csv") -> SweepSpec:
    """Figure-curve grid: lambda from 0 to 1e7 rad/s, 500 points, at the
    config's detuning. The gain column is the fig2 curve, the N_b column
    the fig3 curve."""
    return SweepSpec(
        variable="lambda",
        lambda_range=(0.0, 10e6, 500),
        fixed_detuning=raw.pump_cavity_detuning,
        output_format=output_format,
    )


def report_threshold(raw: RawParams, detuning: float | None = None) -> dict:
    """Threshold report at one detuning: lambda_c, lambda_th, P_th, delta_n."""
    if detuning is not None:
        raw = with_detuning(raw, detuning)
    p = derive(raw)
    lam_c = critical_coupling(p)
    lam_th = gain_mod.threshold_coupling(p)
    return {
        "detuning_rad_per_s": p.detuning,
        "lambda_c_rad_per_s": lam_c,
        "lambda_th_rad_per_s": lam_th,
        "P_th_watt": gain_mod.pump_power(lam_th, p),
        "delta_n_at_threshold": gain_mod.population_inversion(p, lam_th),
    }


def validate_dynamics(
    raw: RawParams,
    lam: float,
    perturbation: float = 1e-4,
    t_max: float | None = None,
    residual_limit: float = 1e-3,
) -> dict:
    """Relaxation cross-check of the analytic steady state at coupling `lam`."""
    p = derive(raw)
    result = relax_to_steady(p, lam, perturbation=perturbation, t_max=t_max)
    analytic = steady_state(p, lam)
    return {
        "lambda_rad_per_s": lam,
        "lambda_c_rad_per_s": critical_coupling(p),
        "phase": analytic.phase.value,
        "residual": result.residual,
        "conservation_drift": result.conservation_drift,
        "window_change": result.window_change,
        "converged_window": result.converged,
        "t_final_s": result.t_final,
        "steps_accepted": result.steps_accepted,
        "steps_rejected": result.steps_rejected,
        "photons2_numeric": result.state.photons_cavity2,
        "photons2_analytic": analytic.photons_cavity2,
        "passed": bool(result.residual < residual_limit),
    }
