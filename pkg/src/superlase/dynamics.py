"""Time-domain integration of the mean-field equations of motion.

Two pictures are supported: the original two-cavity picture (fields a1,
a2 plus the collective spin; no mechanical mode, which drops out of the
phase-transition analysis) and the optical supermode picture (a+, a-,
spin, and the phonon amplitude b). Complex amplitudes are integrated as
interleaved real pairs by an adaptive Dormand-Prince 5(4) scheme.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dicke import Phase, SteadyState, critical_coupling, steady_state
from .errors import DivergenceError, DomainError, StiffnessError
from .params import DerivedParams

DICKE = "dicke"
SUPERMODE = "supermode"

_DIM = {DICKE: 7, SUPERMODE: 9}


@dataclass(frozen=True)
class SystemState:
    """Instantaneous mean-field amplitudes in one of the two pictures.

    dicke picture: a1, a2, j_minus, j_z.
    supermode picture: a_plus, a_minus, j_minus, j_z, b.
    """

    picture: str
    j_minus: complex
    j_z: float
    a1: complex = 0j
    a2: complex = 0j
    a_plus: complex = 0j
    a_minus: complex = 0j
    b: complex = 0j

    def to_array(self) -> np.ndarray:
        if self.picture == DICKE:
            return np.array(
                [
                    self.a1.real, self.a1.imag,
                    self.a2.real, self.a2.imag,
                    self.j_minus.real, self.j_minus.imag,
                    self.j_z,
                ]
            )
        return np.array(
            [
                self.a_plus.real, self.a_plus.imag,
                self.a_minus.real, self.a_minus.imag,
                self.j_minus.real, self.j_minus.imag,
                self.j_z,
                self.b.real, self.b.imag,
            ]
        )

    @staticmethod
    def from_array(picture: str, y: np.ndarray) -> "SystemState":
        if picture == DICKE:
            return SystemState(
                picture=DICKE,
                a1=complex(y[0], y[1]),
                a2=complex(y[2], y[3]),
                j_minus=complex(y[4], y[5]),
                j_z=float(y[6]),
            )
        return SystemState(
            picture=SUPERMODE,
            a_plus=complex(y[0], y[1]),
            a_minus=complex(y[2], y[3]),
            j_minus=complex(y[4], y[5]),
            j_z=float(y[6]),
            b=complex(y[7], y[8]),
        )


def dicke_state(a1=0j, a2=0j, j_minus=0j, j_z=0.0) -> SystemState:
    return SystemState(picture=DICKE, a1=a1, a2=a2, j_minus=j_minus, j_z=j_z)


def supermode_state(a_plus=0j, a_minus=0j, j_minus=0j, j_z=0.0, b=0j) -> SystemState:
    return SystemState(
        picture=SUPERMODE, a_plus=a_plus, a_minus=a_minus,
        j_minus=j_minus, j_z=j_z, b=b,
    )


def to_supermode(s: SystemState, b: complex = 0j) -> SystemState:
    """Map a dicke-picture state into the supermode basis a± = (a1 ± a2)/√2."""
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    return supermode_state(
        a_plus=(s.a1 + s.a2) * inv_sqrt2,
        a_minus=(s.a1 - s.a2) * inv_sqrt2,
        j_minus=s.j_minus,
        j_z=s.j_z,
        b=b,
    )


def _rhs_dicke_vec(y, p: DerivedParams, lam: float, out: np.ndarray) -> np.ndarray:
    gamma, g, dc = p.gamma, p.g, p.detuning
    dcp = p.detuning_prime
    om_r = p.recoil_freq
    sqn = math.sqrt(p.n_atoms)
    a1 = complex(y[0], y[1])
    a2 = complex(y[2], y[3])
    jm = complex(y[4], y[5])
    jz = y[6]
    re_jm2 = 2.0 * jm.real  # J+ + J-
    re_a2x2 = 2.0 * a2.real  # a2* + a2
    da1 = complex(-gamma, dc) * a1 - 1j * g * a2
    da2 = complex(-gamma, dcp) * a2 - 1j * g * a1 - 1j * (lam / sqn) * re_jm2
    djm = -1j * om_r * jm + (2j * lam / sqn) * jz * re_a2x2
    djz = (lam / sqn) * (-2.0 * jm.imag) * re_a2x2  # i(J- - J+) = 2 Im J-
    out[0] = da1.real
    out[1] = da1.imag
    out[2] = da2.real
    out[3] = da2.imag
    out[4] = djm.real
    out[5] = djm.imag
    out[6] = djz
    return out


def _rhs_supermode_vec(y, p: DerivedParams, lam: float, out: np.ndarray) -> np.ndarray:
    r = p.raw
    gamma = p.gamma
    om_p, om_m_freq = p.supermode_freqs
    om_r = p.recoil_freq
    om_mech = r.mech_freq
    gamma_m = r.mech_damping
    chi = r.com_coupling
    nu0 = r.collective_stark_NU0
    sq2n = math.sqrt(2.0 * p.n_atoms)
    ap = complex(y[0], y[1])
    am = complex(y[2], y[3])
    jm = complex(y[4], y[5])
    jz = y[6]
    b = complex(y[7], y[8])
    re_jm2 = 2.0 * jm.real
    quad = 2.0 * (ap.real - am.real)  # a+* + a+ - a-* - a-
    dap = (
        1j * (nu0 + 2.0 * chi * b) / 4.0 * am
        - complex(gamma, om_p) * ap
        - 1j * lam * re_jm2 / sq2n
    )
    dam = (
        1j * (nu0 + 2.0 * chi * b.conjugate()) / 4.0 * ap
        - complex(gamma, om_m_freq) * am
        + 1j * lam * re_jm2 / sq2n
    )
    db = complex(-gamma_m, -om_mech) * b + 0.5j * chi * am.conjugate() * ap
    djm = -1j * om_r * jm + 1j * lam * math.sqrt(2.0 / p.n_atoms) * quad * jz
    djz = (lam / sq2n) * quad * (-2.0 * jm.imag)
    out[0] = dap.real
    out[1] = dap.imag
    out[2] = dam.real
    out[3] = dam.imag
    out[4] = djm.real
    out[5] = djm.imag
    out[6] = djz
    out[7] = db.real
    out[8] = db.imag
    return out


_RHS_VEC = {DICKE: _rhs_dicke_vec, SUPERMODE: _rhs_supermode_vec}


def rhs_dicke(s: SystemState, p: DerivedParams, lam: float) -> SystemState:
    """Time derivatives of the original-picture mean-field equations."""
    if s.picture != DICKE:
        raise DomainError(f"expected a dicke-picture state, got {s.picture!r}")
    out = np.empty(7)
    _rhs_dicke_vec(s.to_array(), p, lam, out)
    return SystemState.from_array(DICKE, out)


def rhs_supermode(s: SystemState, p: DerivedParams, lam: float) -> SystemState:
    """Time derivatives of the supermode-picture equations (incl. phonon)."""
    if s.picture != SUPERMODE:
        raise DomainError(f"expected a supermode-picture state, got {s.picture!r}")
    out = np.empty(9)
    _rhs_supermode_vec(s.to_array(), p, lam, out)
    return SystemState.from_array(SUPERMODE, out)


@dataclass
class Trajectory:
    """Sampled integration output plus step statistics."""

    picture: str
    times: np.ndarray
    states: np.ndarray  # shape (len(times), dim)
    steps_accepted: int = 0
    steps_rejected: int = 0
    rhs_evals: int = 0

    def state_at(self, i: int) -> SystemState:
        return SystemState.from_array(self.picture, self.states[i])

    @property
    def final_state(self) -> SystemState:
        return self.state_at(len(self.times) - 1)

    def conservation(self) -> np.ndarray:
        """|J-|^2 + Jz^2 at every sample (conserved along Eq.-of-motion flow)."""
        jm2 = self.states[:, 4] ** 2 + self.states[:, 5] ** 2
        return jm2 + self.states[:, 6] ** 2


# Dormand-Prince 5(4) tableau.
_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_B5 = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0)
_B4 = (5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40)
_E = tuple(b5 - b4 for b5, b4 in zip(_B5, _B4))

_MIN_STEP = 1e-18  # s; stiffness floor, far below any step the model needs


def integrate(
    rhs: str,
    s0: SystemState,
    p: DerivedParams,
    lam: float,
    t_end: float,
    rel_tol: float = 1e-9,
    abs_tol: float = 1e-9,
    sample_times=None,
) -> Trajectory:
    """Adaptive RK 5(4) integration from t = 0 to t_end.

    `rhs` selects the picture ("dicke" or "supermode") and must match
    `s0.picture`. When `sample_times` is given, the integrator lands on
    each requested time exactly and records the state there; otherwise
    every accepted step is recorded. Deterministic for fixed inputs.
    """
    if rhs not in _RHS_VEC:
        raise DomainError(f"unknown rhs tag {rhs!r}")
    if s0.picture != rhs:
        raise DomainError(f"state picture {s0.picture!r} does not match rhs {rhs!r}")
    if not t_end > 0.0:
        raise DomainError(f"t_end must be > 0, got {t_end}")
    for name, tol in (("rel_tol", rel_tol), ("abs_tol", abs_tol)):
        if not 0.0 < tol <= 1e-2:
            raise DomainError(f"{name} must be in (0, 1e-2], got {tol}")

    if sample_times is not None:
        samples = np.asarray(sample_times, dtype=float)
        if samples.ndim != 1 or len(samples) == 0:
            raise DomainError("sample_times must be a non-empty 1-D sequence")
        if np.any(np.diff(samples) <= 0.0) or samples[0] <= 0.0 or samples[-1] > t_end:
            raise DomainError("sample_times must be strictly increasing in (0, t_end]")
    else:
        samples = None

    f = _RHS_VEC[rhs]
    dim = _DIM[rhs]
    y = s0.to_array()
    t = 0.0
    n_eval = 0
    n_acc = 0
    n_rej = 0

    k = [np.empty(dim) for _ in range(7)]
    f(y, p, lam, k[0])
    n_eval += 1

    # Initial step from the rhs magnitude (Hairer-style, simplified).
    sc = abs_tol + rel_tol * np.abs(y)
    d0 = math.sqrt(float(np.mean((y / sc) ** 2)))
    d1 = math.sqrt(float(np.mean((k[0] / sc) ** 2)))
    h = 0.01 * d0 / d1 if d0 > 1e-10 and d1 > 1e-10 else t_end * 1e-6
    h = min(h, t_end)

    rec_times = [0.0]
    rec_states = [y.copy()]
    sample_idx = 0
    y_stage = np.empty(dim)

    while t < t_end:
        t_target = t_end if samples is None else samples[sample_idx]
        while True:
            # Land exactly on the next requested time / the end time.
            landing = t + h >= t_target
            h_try = t_target - t if landing else h
            for i in range(1, 7):
                np.copyto(y_stage, y)
                for j, a in enumerate(_A[i]):
                    if a != 0.0:
                        y_stage += (h_try * a) * k[j]
                f(y_stage, p, lam, k[i])
                n_eval += 1
            y_new = y_stage  # stage 7 uses the 5th-order weights: y_new = y5
            err_vec = np.zeros(dim)
            for j, e in enumerate(_E):
                if e != 0.0:
                    err_vec += e * k[j]
            sc = abs_tol + rel_tol * np.maximum(np.abs(y), np.abs(y_new))
            err = math.sqrt(float(np.mean((h_try * err_vec / sc) ** 2)))
            if not np.isfinite(y_new).all() or not math.isfinite(err):
                raise DivergenceError(
                    f"non-finite state at t = {t:g} s", last_time=t
                )
            if err <= 1.0:
                break
            n_rej += 1
            h = h_try * min(1.0, max(0.2, 0.9 * err ** -0.2))
            if h < _MIN_STEP:
                raise StiffnessError(
                    f"step size underflow at t = {t:g} s", last_time=t
                )
        t = t_target if landing else t + h_try
        y = y_new.copy()
        np.copyto(k[0], k[6])  # FSAL
        n_acc += 1
        if samples is None:
            rec_times.append(t)
            rec_states.append(y.copy())
        elif t >= samples[sample_idx]:
            rec_times.append(t)
            rec_states.append(y.copy())
            sample_idx += 1
            if sample_idx >= len(samples):
                break
        factor = 0.9 * err ** -0.2 if err > 0.0 else 5.0
        h = h_try * min(5.0, max(0.2, factor))
        h = max(h, _MIN_STEP)

    return Trajectory(
        picture=rhs,
        times=np.array(rec_times),
        states=np.array(rec_states),
        steps_accepted=n_acc,
        steps_rejected=n_rej,
        rhs_evals=n_eval,
    )


@dataclass
class RelaxationResult:
    """Outcome of a relaxation run toward the analytic steady state."""

    state: SteadyState
    converged: bool
    residual: float
    window_change: float
    conservation_drift: float
    t_final: float
    steps_accepted: int = 0
    steps_rejected: int = 0


def relax_to_steady(
    p: DerivedParams,
    lam: float,
    perturbation: float = 1e-4,
    t_max: float | None = None,
    rel_tol: float = 1e-9,
    abs_tol: float | None = None,
) -> RelaxationResult:
    """Integrate Eq.-of-motion dynamics from a kicked analytic steady state.

    Superradiant phase: every component of the analytic fixed point is
    multiplied by (1 + perturbation). Normal phase: the fixed point has no
    amplitude to kick, so the optical fields are seeded with amplitude
    perturbation*sqrt(N) while the spin sector stays exactly at zero (any
    spin seed precesses at ~omega_r essentially undamped and sustains the
    fields at first order, defeating a decay test).

    Convergence is declared when the relative state change over a 10/gamma
    window drops below 1e-8. Exceeding t_max is NOT an exception: the result
    carries converged=False plus the final residual. `residual` is the
    maximum relative deviation from the analytic steady state (normal phase:
    the largest field amplitude relative to the initial seed).
    """
    analytic = steady_state(p, lam)
    lam_c = critical_coupling(p)
    if lam == lam_c:
        raise DomainError("relaxation is undefined exactly at the critical point")
    gamma = p.gamma
    window = 10.0 / gamma
    if t_max is None:
        t_max = 50.0 / gamma
    n = p.n_atoms
    seed = abs(perturbation) * math.sqrt(n)

    if analytic.phase is Phase.SUPERRADIANT:
        y = dicke_state(
            a1=analytic.a1, a2=analytic.a2,
            j_minus=analytic.j_minus, j_z=analytic.j_z,
        ).to_array() * (1.0 + perturbation)
    else:
        y = dicke_state(a1=complex(seed), a2=complex(seed)).to_array()

    if abs_tol is None:
        # Scale the absolute floor to the state so a decaying field can be
        # tracked far below its initial amplitude instead of stalling at a
        # fixed-noise floor.
        abs_tol = max(rel_tol * 1e-6 * float(np.max(np.abs(y))), 1e-300)

    cons0 = y[4] ** 2 + y[5] ** 2 + y[6] ** 2
    cons_scale = max(cons0, (n / 2.0) ** 2)
    t = 0.0
    converged = False
    change = math.inf
    n_acc = 0
    n_rej = 0
    drift = 0.0
    while t < t_max:
        chunk = min(window, t_max - t)
        traj = integrate(
            DICKE, SystemState.from_array(DICKE, y), p, lam, chunk,
            rel_tol=rel_tol, abs_tol=abs_tol, sample_times=[chunk],
        )
        y_new = traj.states[-1]
        n_acc += traj.steps_accepted
        n_rej += traj.steps_rejected
        drift = max(drift, float(np.max(np.abs(traj.conservation() - cons0))) / cons_scale)
        norm = float(np.linalg.norm(y_new))
        change = float(np.linalg.norm(y_new - y)) / max(norm, seed, 1e-300)
        y = y_new
        t += chunk
        if chunk >= window and change < 1e-8:
            converged = True
            break

    final = SystemState.from_array(DICKE, y)
    if analytic.phase is Phase.SUPERRADIANT:
        residual = max(
            abs(final.a1 - analytic.a1) / abs(analytic.a1),
            abs(final.a2 - analytic.a2) / abs(analytic.a2),
            abs(final.j_minus - analytic.j_minus) / abs(analytic.j_minus),
            abs(final.j_z - analytic.j_z) / (n / 2.0),
        )
    else:
        residual = max(abs(final.a1), abs(final.a2)) / max(seed, 1e-300)

    numeric = SteadyState(
        a1=final.a1,
        a2=final.a2,
        j_minus=final.j_minus,
        j_z=final.j_z,
        photons_cavity2=abs(final.a2) ** 2,
        phase=analytic.phase,
    )
    return RelaxationResult(
        state=numeric,
        converged=converged,
        residual=residual,
        window_change=change,
        conservation_drift=drift,
        t_final=t,
        steps_accepted=n_acc,
        steps_rejected=n_rej,
    )


def export_csv(traj: Trajectory, path) -> None:
    """Write a trajectory as CSV with round-trip float formatting.

    Columns: t, re_a1, im_a1, re_a2, im_a2, re_Jm, im_Jm, Jz[, re_b, im_b].
    In the supermode picture the a1/a2 columns hold a+/a-.
    """
    header = "t,re_a1,im_a1,re_a2,im_a2,re_Jm,im_Jm,Jz"
    if traj.picture == SUPERMODE:
        header += ",re_b,im_b"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(header + "\n")
        for t, row in zip(traj.times, traj.states):
            cells = [repr(float(t))] + [repr(float(x)) for x in row]
            fh.write(",".join(cells) + "\n")
