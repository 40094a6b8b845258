"""CGS physical constants and the unit conversions used by every other module.

All internal computation runs in Gaussian CGS with temperature carried as an
energy (erg); Kelvin appears only at display boundaries.  Entropy is
dimensionless (nats), converted to bits on request.

Base values are CODATA 2018, frozen here so results do not drift with
library upgrades.  Derived constants (sigma_SB, planck_length, planck_mass)
are recomputed from the base four at import time and never stored
independently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError

#: log2(e), the nats -> bits conversion factor.
LOG2E = math.log2(math.e)


@dataclass(frozen=True)
class PhysicalConstants:
    """Fundamental constants in CGS plus the derived quantum-gravity scales.

    Attributes
    ----------
    G : float
        Newtonian gravitational constant [cm^3 g^-1 s^-2].
    c : float
        Speed of light [cm s^-1].
    hbar : float
        Reduced Planck constant [erg s].
    k_B : float
        Boltzmann constant [erg K^-1].
    sigma_SB : float
        Stefan-Boltzmann constant, pi^2 k_B^4 / (60 hbar^3 c^2)
        [erg cm^-2 s^-1 K^-4].  Derived.
    planck_length : float
        (G hbar / c^3)^(1/2) [cm].  Derived.
    planck_mass : float
        (hbar c / G)^(1/2) [g].  Derived.
    """

    G: float
    c: float
    hbar: float
    k_B: float
    sigma_SB: float = field(init=False)
    planck_length: float = field(init=False)
    planck_mass: float = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "sigma_SB",
            math.pi**2 * self.k_B**4 / (60.0 * self.hbar**3 * self.c**2))
        object.__setattr__(
            self, "planck_length", math.sqrt(self.G * self.hbar / self.c**3))
        object.__setattr__(
            self, "planck_mass", math.sqrt(self.hbar * self.c / self.G))


# CODATA 2018; c and k_B are exact by SI definition.
CODATA2018 = PhysicalConstants(
    G=6.67430e-8,          # cm^3 g^-1 s^-2
    c=2.99792458e10,       # cm s^-1
    hbar=1.054571817e-27,  # erg s
    k_B=1.380649e-16,      # erg K^-1
)

#: Default constants used throughout the package.
CONSTANTS = CODATA2018


def geometrized_mass(m: float) -> float:
    """Convert a mass m [g] to its gravitational length G m / c^2 [cm].

    For a Schwarzschild hole the horizon radius is twice this length.
    """
    if m <= 0:
        raise DomainError(f"mass must be positive, got {m}")
    return CONSTANTS.G * m / CONSTANTS.c**2


def mass_from_geometrized(length: float) -> float:
    """Inverse of :func:`geometrized_mass`: length [cm] back to mass [g]."""
    if length <= 0:
        raise DomainError(f"length must be positive, got {length}")
    return length * CONSTANTS.c**2 / CONSTANTS.G


def geometrized_charge(q: float) -> float:
    """Convert a charge q [esu] to its length sqrt(G) q / c^2 [cm]."""
    return math.sqrt(CONSTANTS.G) * q / CONSTANTS.c**2


def spin_length(j: float, m: float) -> float:
    """Spin length a = j / (m c) [cm] of angular momentum j [erg s] at mass m [g]."""
    if m <= 0:
        raise DomainError(f"mass must be positive, got {m}")
    return j / (m * CONSTANTS.c)


def energy_temperature_to_kelvin(T: float) -> float:
    """Convert a temperature expressed as an energy [erg] to Kelvin."""
    if T < 0:
        raise DomainError(f"temperature must be non-negative, got {T}")
    return T / CONSTANTS.k_B


def nats_to_bits(S: float) -> float:
    """Convert an entropy or information content from nats to bits."""
    if S < 0:
        raise DomainError(f"entropy must be non-negative, got {S}")
    return S * LOG2E


def constants_table(constants: PhysicalConstants = CONSTANTS) -> dict:
    """Full constants table with unit annotations, for machine output."""
    values = {
        "G": constants.G,
        "c": constants.c,
        "hbar": constants.hbar,
        "k_B": constants.k_B,
        "sigma_SB": constants.sigma_SB,
        "planck_length": constants.planck_length,
        "planck_mass": constants.planck_mass,
    }
    units = {
        "G": "cm^3 g^-1 s^-2",
        "c": "cm s^-1",
        "hbar": "erg s",
        "k_B": "erg K^-1",
        "sigma_SB": "erg cm^-2 s^-1 K^-4",
        "planck_length": "cm",
        "planck_mass": "g",
    }
    return {"values": values, "units": units, "source": "CODATA 2018 (frozen)"}
