"""Input parameters and derived quantities of the coupled-cavity system.

Unit convention: every frequency, rate and detuning is an angular
frequency in rad/s. Quantities quoted in the literature as "2pi x f Hz"
must be multiplied out before they reach :class:`RawParams`; the config
layer (:mod:`superlase.config`) does this via explicit key suffixes.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .constants import HBAR, RB87_D2_DIPOLE, RB87_MASS, TWO_PI
from .errors import DomainError


def recoil_frequency(wavelength: float, mass: float) -> float:
    """Photon-recoil angular frequency hbar*k^2/(2m), k = 2pi/wavelength."""
    if wavelength <= 0.0:
        raise DomainError(f"wavelength must be > 0, got {wavelength}")
    if mass <= 0.0:
        raise DomainError(f"mass must be > 0, got {mass}")
    k = TWO_PI / wavelength
    return HBAR * k * k / (2.0 * mass)


@dataclass(frozen=True)
class RawParams:
    """Experimentally quoted inputs. Immutable; validated on construction.

    Attributes
    ----------
    n_atoms : atom number N (dimensionless)
    pump_wavelength : pump wavelength, m
    cavity_loss : optical loss rate gamma of each cavity, rad/s
    mech_freq : mechanical frequency omega_m, rad/s
    mech_damping : mechanical damping gamma_m, 1/s
    atom_photon_g0 : single atom-photon coupling g0, rad/s
    collective_stark_NU0 : collective light shift N*U0, rad/s (may be < 0)
    com_coupling : optomechanical coupling chi, 1/s
    cavity_coupling : intercavity tunneling g, rad/s
    pump_cavity_detuning : Delta_c = omega_p - omega_c, rad/s
    atom_mass : single-atom mass, kg
    dipole_moment : transition dipole matrix element, C m
    beam_waist : pump beam waist radius, m
    """

    n_atoms: float
    pump_wavelength: float
    cavity_loss: float
    mech_freq: float
    mech_damping: float
    atom_photon_g0: float
    collective_stark_NU0: float
    com_coupling: float
    cavity_coupling: float
    pump_cavity_detuning: float
    atom_mass: float = RB87_MASS
    dipole_moment: float = RB87_D2_DIPOLE
    beam_waist: float = 25e-6

    def __post_init__(self):
        positive = {
            "pump_wavelength": self.pump_wavelength,
            "cavity_loss": self.cavity_loss,
            "mech_freq": self.mech_freq,
            "mech_damping": self.mech_damping,
            "atom_photon_g0": self.atom_photon_g0,
            "atom_mass": self.atom_mass,
            "beam_waist": self.beam_waist,
        }
        for name, value in positive.items():
            if not value > 0.0:
                raise DomainError(f"{name} must be > 0, got {value}")
        if self.n_atoms < 1:
            raise DomainError(f"n_atoms must be >= 1, got {self.n_atoms}")
        if self.com_coupling < 0.0:
            raise DomainError(
                f"com_coupling must be >= 0, got {self.com_coupling}"
            )


@dataclass(frozen=True)
class DerivedParams:
    """RawParams plus the cached algebraic combinations used everywhere.

    u = g^2 + gamma^2 - Delta_c*Delta'_c and v = gamma*(Delta_c + Delta'_c)
    are the denominator coefficients of the steady-state solutions;
    omega_pm are the optical supermode frequencies.
    """

    raw: RawParams
    wavevector: float = field(init=False)
    recoil_freq: float = field(init=False)
    u0: float = field(init=False)
    detuning_prime: float = field(init=False)
    supermode_freqs: tuple[float, float] = field(init=False)
    u_coef: float = field(init=False)
    v_coef: float = field(init=False)

    def __post_init__(self):
        r = self.raw
        set_ = object.__setattr__
        set_(self, "wavevector", TWO_PI / r.pump_wavelength)
        set_(self, "recoil_freq", recoil_frequency(r.pump_wavelength, r.atom_mass))
        set_(self, "u0", r.collective_stark_NU0 / r.n_atoms)
        dp = r.pump_cavity_detuning - r.collective_stark_NU0 / 2.0
        set_(self, "detuning_prime", dp)
        g = r.cavity_coupling
        base = -r.pump_cavity_detuning + r.collective_stark_NU0 / 4.0
        set_(self, "supermode_freqs", (base + g, base - g))
        gamma = r.cavity_loss
        dc = r.pump_cavity_detuning
        set_(self, "u_coef", g * g + gamma * gamma - dc * dp)
        set_(self, "v_coef", gamma * (dc + dp))

    # Shorthand accessors used heavily by the solvers.
    @property
    def n_atoms(self):
        return self.raw.n_atoms

    @property
    def gamma(self):
        return self.raw.cavity_loss

    @property
    def detuning(self):
        return self.raw.pump_cavity_detuning

    @property
    def g(self):
        return self.raw.cavity_coupling


def derive(raw: RawParams) -> DerivedParams:
    """Compute all derived quantities for `raw`. Pure and deterministic."""
    return DerivedParams(raw=raw)


def paper_preset() -> RawParams:
    """The Fig. 2 parameter set (87Rb, Delta_c = 0.5 omega_m)."""
    return RawParams(
        n_atoms=1e5,
        pump_wavelength=784.3e-9,
        cavity_loss=TWO_PI * 1e6,
        mech_freq=TWO_PI * 20e6,
        mech_damping=100.0,
        atom_photon_g0=TWO_PI * 14e6,
        collective_stark_NU0=-TWO_PI * 2e6,
        com_coupling=300.0,
        cavity_coupling=TWO_PI * 10e6,
        pump_cavity_detuning=TWO_PI * 10e6,
        atom_mass=RB87_MASS,
        dipole_moment=RB87_D2_DIPOLE,
        beam_waist=25e-6,
    )


def with_detuning(raw: RawParams, detuning: float) -> RawParams:
    """Copy of `raw` with a different pump-cavity detuning (rad/s)."""
    return replace(raw, pump_cavity_detuning=detuning)
