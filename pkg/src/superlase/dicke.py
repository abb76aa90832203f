"""Analytic superradiant phase transition of the coupled-cavity Dicke model.

Everything here is closed-form: the critical coupling, the steady-state
amplitudes above threshold, the intracavity photon number, and a 1-D
search for the detuning that minimizes the critical coupling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, NoMinimumError, SingularPointError
from .numerics import golden_section_minimize
from .params import DerivedParams, derive, with_detuning

# Relative size of |gamma*v - Delta_c*u| below which the critical coupling
# is treated as divergent (singular detuning).
_SINGULAR_REL = 1e-12


class Phase(Enum):
    NORMAL = "Normal"
    SUPERRADIANT = "Superradiant"
    CRITICAL = "Critical"


@dataclass(frozen=True)
class SteadyState:
    """Analytic fixed point of the mean-field equations.

    j_minus is taken real-positive (the symmetry-broken partners differ by
    a phase). photons_cavity2 = |a2|^2. In the normal phase all amplitudes
    vanish and j_z = -N/2 by convention.
    """

    a1: complex
    a2: complex
    j_minus: complex
    j_z: float
    photons_cavity2: float
    phase: Phase


def _threshold_denominator(p: DerivedParams) -> float:
    """gamma*v - Delta_c*u, raising if it is numerically singular."""
    d = p.gamma * p.v_coef - p.detuning * p.u_coef
    scale = abs(p.gamma * p.v_coef) + abs(p.detuning * p.u_coef)
    if abs(d) <= _SINGULAR_REL * scale or d == 0.0:
        raise SingularPointError(
            f"critical coupling diverges: gamma*v = Delta_c*u at "
            f"detuning {p.detuning:g} rad/s"
        )
    return d


def critical_coupling(p: DerivedParams) -> float:
    """Critical atom-photon coupling lambda_c (rad/s).

    lambda_c = (1/2) sqrt(omega_r (u^2 + v^2) / |gamma v - Delta_c u|).
    """
    d = _threshold_denominator(p)
    u, v = p.u_coef, p.v_coef
    return 0.5 * math.sqrt(p.recoil_freq * (u * u + v * v) / abs(d))


def steady_state(p: DerivedParams, lam: float) -> SteadyState:
    """Steady-state amplitudes at coupling `lam` (rad/s)."""
    if lam < 0.0:
        raise DomainError(f"lambda must be >= 0, got {lam}")
    lam_c = critical_coupling(p)
    n = p.n_atoms
    if lam < lam_c:
        return SteadyState(0j, 0j, 0j, -n / 2.0, 0.0, Phase.NORMAL)
    if lam == lam_c:
        return SteadyState(0j, 0j, 0j, -n / 2.0, 0.0, Phase.CRITICAL)
    d = _threshold_denominator(p)
    u, v = p.u_coef, p.v_coef
    j_z = n * p.recoil_freq * (u * u + v * v) / (8.0 * lam * lam * d)
    j_minus = math.sqrt(max(n * n / 4.0 - j_z * j_z, 0.0))
    gamma, dc = p.gamma, p.detuning
    a2 = -2.0 * lam * complex(dc, gamma) * j_minus / (
        math.sqrt(n) * complex(u, -v)
    )
    a1 = -1j * p.g * a2 / complex(gamma, -dc)
    return SteadyState(
        a1=a1,
        a2=a2,
        j_minus=complex(j_minus),
        j_z=j_z,
        photons_cavity2=abs(a2) ** 2,
        phase=Phase.SUPERRADIANT,
    )


def intracavity_photons(p: DerivedParams, lam: float) -> float:
    """Steady-state photon number |a2|^2 of the atom cavity.

    N lam^2 (Delta_c^2 + gamma^2)/(u^2 + v^2) * (1 - lam_c^4/lam^4),
    clamped to 0 at and below threshold.
    """
    if lam < 0.0:
        raise DomainError(f"lambda must be >= 0, got {lam}")
    lam_c = critical_coupling(p)
    if lam <= lam_c:
        return 0.0
    u, v = p.u_coef, p.v_coef
    gamma, dc = p.gamma, p.detuning
    prefactor = p.n_atoms * lam * lam * (dc * dc + gamma * gamma) / (u * u + v * v)
    return prefactor * (1.0 - (lam_c / lam) ** 4)


def minimize_critical_coupling(
    p: DerivedParams,
    detuning_range: tuple[float, float],
    grid: int = 64,
) -> tuple[float, float]:
    """Detuning that minimizes lambda_c over `detuning_range`.

    Grid scan over `grid` points, then golden-section refinement inside
    the interval bracketing the best grid point. Singular detunings are
    skipped (masked as +inf). Returns (detuning*, lambda_c*). Deterministic.
    """
    lo, hi = detuning_range
    if not lo < hi:
        raise DomainError(f"empty detuning interval [{lo:g}, {hi:g}]")
    if grid < 3:
        raise DomainError(f"grid must be >= 3, got {grid}")

    def lam_c_of(dc: float) -> float:
        try:
            return critical_coupling(derive(with_detuning(p.raw, dc)))
        except SingularPointError:
            return math.inf

    xs = np.linspace(lo, hi, grid)
    vals = np.array([lam_c_of(x) for x in xs])
    if not np.isfinite(vals).any():
        raise NoMinimumError(
            f"every grid point in [{lo:g}, {hi:g}] is singular"
        )
    i = int(np.argmin(vals))
    a = xs[max(i - 1, 0)]
    b = xs[min(i + 1, grid - 1)]
    x_ref, f_ref = golden_section_minimize(lam_c_of, a, b)
    if f_ref <= vals[i]:
        return float(x_ref), float(f_ref)
    return float(xs[i]), float(vals[i])
