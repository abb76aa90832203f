"""Physical constants (CODATA 2018) and the rubidium-87 defaults.

Frozen literal values so that every run is bit-reproducible. All
frequencies elsewhere in the package are angular frequencies in rad/s.
"""

import math

TWO_PI = 2.0 * math.pi

HBAR = 1.054571817e-34  # J s
EPSILON_0 = 8.8541878128e-12  # F / m
SPEED_OF_LIGHT = 2.99792458e8  # m / s
BOLTZMANN = 1.380649e-23  # J / K

# 87Rb defaults; both are overridable config fields.
RB87_MASS = 1.44316e-25  # kg
RB87_D2_DIPOLE = 3.584e-29  # C m

__all__ = [
    "TWO_PI",
    "HBAR",
    "EPSILON_0",
    "SPEED_OF_LIGHT",
    "BOLTZMANN",
    "RB87_MASS",
    "RB87_D2_DIPOLE",
]
