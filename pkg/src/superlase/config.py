"""Config ingestion: sectioned key = value files with explicit unit suffixes.

Frequencies and rates accept two suffix styles:
  *_rad_per_s   value is already an angular frequency / rate in rad/s (1/s)
  *_two_pi_hz   value f means 2*pi*f rad/s
Lengths use *_m, masses *_kg, the dipole moment *_coulomb_m, and the atom
count is the bare key `n_atoms`. Section names are organizational only;
keys live in one flat namespace. A bundled preset `paper.cfg` carries the
published Fig. 2 parameter set.
"""

from __future__ import annotations

import configparser
from importlib import resources
from pathlib import Path

from .constants import TWO_PI
from .errors import ConfigError, DomainError
from .params import RawParams

_ANGULAR_FIELDS = (
    "cavity_loss",
    "mech_freq",
    "mech_damping",
    "atom_photon_g0",
    "collective_stark_NU0",
    "com_coupling",
    "cavity_coupling",
    "pump_cavity_detuning",
)
_PLAIN_FIELDS = {
    "n_atoms": "n_atoms",
    "pump_wavelength_m": "pump_wavelength",
    "atom_mass_kg": "atom_mass",
    "dipole_moment_coulomb_m": "dipole_moment",
    "beam_waist_m": "beam_waist",
}
# Fields with package defaults (87Rb) that a config may omit.
_OPTIONAL = {"atom_mass", "dipole_moment"}


def _key_to_field(key: str) -> tuple[str, float]:
    """Map a config key to (RawParams field, multiplier)."""
    if key in _PLAIN_FIELDS:
        return _PLAIN_FIELDS[key], 1.0
    for base in _ANGULAR_FIELDS:
        if key == base + "_rad_per_s":
            return base, 1.0
        if key == base + "_two_pi_hz":
            return base, TWO_PI
    raise ConfigError(f"unknown or unsuffixed config key {key!r}")


def load_params(path) -> RawParams:
    """Parse a config file into RawParams."""
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    parser.optionxform = str  # keep key case (NU0 etc.)
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_file(fh)
    except configparser.Error as exc:
        raise ConfigError(f"unreadable config {path}: {exc}") from exc

    values: dict[str, float] = {}
    for section in parser.sections():
        for key, raw_value in parser.items(section):
            field, mult = _key_to_field(key)
            if field in values:
                raise ConfigError(
                    f"duplicate key for field {field!r} (section [{section}], key {key!r})"
                )
            try:
                values[field] = float(raw_value) * mult
            except ValueError as exc:
                raise ConfigError(
                    f"bad value for key {key!r} in [{section}]: {raw_value!r}"
                ) from exc

    missing = (
        set(RawParams.__dataclass_fields__) - set(values) - _OPTIONAL
        - {"beam_waist"}
    )
    if missing:
        raise ConfigError(f"missing config keys for fields: {sorted(missing)}")
    try:
        return RawParams(**values)
    except DomainError as exc:
        raise ConfigError(f"invalid parameter values in {path}: {exc}") from exc


def paper_config_path() -> Path:
    """Filesystem path of the bundled paper preset config."""
    return Path(resources.files("superlase").joinpath("data/paper.cfg"))
