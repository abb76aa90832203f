"""Semiclassical simulator of a superradiance-driven phonon laser.

Two coupled optical cavities: one holds a transversally pumped atomic
condensate (Dicke superradiance), the other a vibrating membrane. The
package computes the superradiant phase transition, the mechanical gain
of the membrane mode, lasing thresholds and pump powers, time-domain
mean-field dynamics, and parameter-sweep tables.
"""

from .config import load_params, paper_config_path
from .dicke import (
    Phase,
    SteadyState,
    critical_coupling,
    intracavity_photons,
    minimize_critical_coupling,
    steady_state,
)
from .dynamics import (
    RelaxationResult,
    SystemState,
    Trajectory,
    integrate,
    relax_to_steady,
    rhs_dicke,
    rhs_supermode,
)
from .gain import (
    GainBreakdown,
    alpha_beta,
    mechanical_gain,
    phonon_number,
    population_inversion,
    pump_power,
    threshold_coupling,
)
from .params import (
    DerivedParams,
    RawParams,
    derive,
    paper_preset,
    recoil_frequency,
    with_detuning,
)

__version__ = "0.1.0"

__all__ = [
    "Phase",
    "SteadyState",
    "critical_coupling",
    "intracavity_photons",
    "minimize_critical_coupling",
    "steady_state",
    "RelaxationResult",
    "SystemState",
    "Trajectory",
    "integrate",
    "relax_to_steady",
    "rhs_dicke",
    "rhs_supermode",
    "GainBreakdown",
    "alpha_beta",
    "mechanical_gain",
    "phonon_number",
    "population_inversion",
    "pump_power",
    "threshold_coupling",
    "DerivedParams",
    "RawParams",
    "derive",
    "paper_preset",
    "recoil_frequency",
    "with_detuning",
    "load_params",
    "paper_config_path",
    "__version__",
]
