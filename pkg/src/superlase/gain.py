"""Closed-form phonon-laser observables.

Supermode population inversion, mechanical gain G = G0 + G1, mechanical
frequency pull, residual drive on the phonon mode, stimulated phonon
number, lasing threshold, and the pump power needed to reach a given
coupling. All evaluated in the near-threshold regime where the phonon
occupation feeding back into alpha is negligible (b = 0, n_b = 0 by
default; a self-consistent alpha is available through the `b` and `n_b`
arguments of :func:`alpha_beta`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import EPSILON_0, HBAR, SPEED_OF_LIGHT
from .dicke import critical_coupling, intracavity_photons, steady_state
from .errors import BracketError, DomainError
from .numerics import bisect_secant_root
from .params import DerivedParams


@dataclass(frozen=True)
class GainBreakdown:
    """Gain and related quantities at a given (lambda, detuning).

    gain = g0_term + g1_term exactly; n_b = exp(2(gain - gamma_m)/gamma_m)
    (inf when the exponent overflows, see `saturated`). Below threshold
    delta_n = 0 and gain = 0.
    """

    delta_n: float
    g0_term: float
    g1_term: float
    gain: float
    freq_pull: float
    drive_c: complex
    alpha: float
    beta: float
    n_b: float

    @property
    def saturated(self) -> bool:
        return math.isinf(self.n_b)


def alpha_beta(p: DerivedParams, b: complex = 0j, n_b: float = 0.0) -> tuple[float, float]:
    """Denominator coefficients of the adiabatically eliminated supermodes.

    alpha = gamma^2 + g^2 - Delta_c^2 + (N U0/4)(2 Delta_c + chi Re b)
            + (chi^2/4) n_b
    beta  = gamma (Delta_c + Delta'_c)
    """
    if n_b < 0.0:
        raise DomainError(f"n_b must be >= 0, got {n_b}")
    r = p.raw
    gamma, g, dc = p.gamma, p.g, p.detuning
    alpha = (
        gamma * gamma
        + g * g
        - dc * dc
        + (r.collective_stark_NU0 / 4.0) * (2.0 * dc + r.com_coupling * b.real)
        + (r.com_coupling**2 / 4.0) * n_b
    )
    beta = gamma * (dc + p.detuning_prime)
    return alpha, beta


def population_inversion(p: DerivedParams, lam: float) -> float:
    """Supermode population inversion delta_n = <a+^ a+> - <a-^ a->.

    2 g Delta_c/(Delta_c^2 + gamma^2) * |a_2s|^2; zero at or below lambda_c.
    """
    gamma, dc = p.gamma, p.detuning
    return 2.0 * p.g * dc / (dc * dc + gamma * gamma) * intracavity_photons(p, lam)


def phonon_number(gain: float, gamma_m: float) -> float:
    """Stimulated emitted phonon number exp(2(G - gamma_m)/gamma_m).

    Overflow saturates to +inf instead of raising.
    """
    if gamma_m <= 0.0:
        raise DomainError(f"gamma_m must be > 0, got {gamma_m}")
    try:
        return math.exp(2.0 * (gain - gamma_m) / gamma_m)
    except OverflowError:
        return math.inf


def mechanical_gain(p: DerivedParams, lam: float) -> GainBreakdown:
    """Full gain breakdown at coupling `lam` (rad/s).

    Uses the analytic steady state for J-^2 (real-positive convention) and
    alpha, beta at b = 0, n_b = 0 (near-threshold regime).
    """
    r = p.raw
    gamma, g, dc = p.gamma, p.g, p.detuning
    chi = r.com_coupling
    om_m = r.mech_freq
    n = p.n_atoms
    mismatch = 2.0 * g - om_m

    delta_n = population_inversion(p, lam)
    jm_sq = abs(steady_state(p, lam).j_minus) ** 2
    alpha, beta = alpha_beta(p, 0j, 0.0)
    denom_ab = n * (alpha * alpha + beta * beta)

    g0 = chi * chi * gamma * delta_n / (2.0 * mismatch * mismatch + 8.0 * gamma * gamma)
    g1 = 0.0
    freq_pull = 0.0
    drive_c = 0j
    if jm_sq > 0.0:
        lam2_jm2 = lam * lam * jm_sq
        g1 = -(chi * chi * lam2_jm2 * beta * mismatch) / (
            denom_ab * (mismatch * mismatch + 4.0 * gamma * gamma)
        )
        freq_pull = chi * chi / (4.0 * gamma * gamma + mismatch * mismatch) * (
            -mismatch * delta_n / 4.0 - 2.0 * gamma * lam2_jm2 * beta / denom_ab
        )
        # Delta in the (alpha gamma + beta Delta) term is read as Delta_c.
        drive_c = (2.0 * chi * lam2_jm2 / complex(2.0 * gamma, mismatch)) * (
            r.collective_stark_NU0 * delta_n / (16.0 * lam2_jm2)
            - (g * alpha + 1j * (alpha * gamma + beta * dc)) / denom_ab
        )
    total = g0 + g1
    return GainBreakdown(
        delta_n=delta_n,
        g0_term=g0,
        g1_term=g1,
        gain=total,
        freq_pull=freq_pull,
        drive_c=drive_c,
        alpha=alpha,
        beta=beta,
        n_b=phonon_number(total, r.mech_damping),
    )


def threshold_coupling(
    p: DerivedParams,
    bracket: tuple[float, float] | None = None,
    rel_tol: float = 1e-10,
) -> float:
    """Smallest coupling where G(lambda) = gamma_m (lasing threshold), rad/s.

    Default bracket is [1.001 lambda_c, 20 lambda_c]; G vanishes below
    lambda_c so smaller lower bounds are useless. A coarse scan locates the
    first sign change, then bisection + secant refine it.
    """
    gamma_m = p.raw.mech_damping
    if bracket is None:
        lam_c = critical_coupling(p)
        bracket = (1.001 * lam_c, 20.0 * lam_c)
    lo, hi = bracket

    def f(lam: float) -> float:
        return mechanical_gain(p, lam).gain - gamma_m

    # Find the first sign-change subinterval so the smallest root is returned.
    n_scan = 64
    step = (hi - lo) / n_scan
    x_prev, f_prev = lo, f(lo)
    for i in range(1, n_scan + 1):
        x = lo + i * step
        fx = f(x)
        if f_prev == 0.0:
            return x_prev
        if math.copysign(1.0, f_prev) != math.copysign(1.0, fx):
            return bisect_secant_root(f, x_prev, x, rel_tol=rel_tol)
        x_prev, f_prev = x, fx
    raise BracketError(
        f"G - gamma_m has no sign change on [{lo:g}, {hi:g}]: "
        f"f(lo)={f(lo):g}, f(hi)={f(hi):g}",
        f_lo=f(lo),
        f_hi=f(hi),
    )


def pump_power(lam: float, p: DerivedParams) -> float:
    """Transverse pump power (W) that realizes coupling `lam`.

    P = pi hbar^2 eps0 c w_c^2 g0^2 lam^2 / (2 N D^2 U0^2).
    """
    r = p.raw
    if r.dipole_moment <= 0.0:
        raise DomainError(f"dipole_moment must be > 0, got {r.dipole_moment}")
    if p.u0 == 0.0:
        raise DomainError("U0 = 0: pump power is undefined")
    return (
        math.pi
        * HBAR**2
        * EPSILON_0
        * SPEED_OF_LIGHT
        * r.beam_waist**2
        * r.atom_photon_g0**2
        * lam
        * lam
        / (2.0 * r.n_atoms * r.dipole_moment**2 * p.u0**2)
    )
