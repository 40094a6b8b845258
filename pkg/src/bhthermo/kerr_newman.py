"""Kerr-Newman black hole model: horizon geometry, entropy, temperature,
first-law potentials.

A stationary black hole is fixed by mass m [g], charge q [esu] and angular
momentum j [erg s].  Three derived length scales specify it completely:

    M = G m / c^2           gravitational length [cm]
    Q = sqrt(G) q / c^2     charge length [cm]
    a = j / (m c)           spin length [cm]

from which

    r_plus = M + sqrt(M^2 - Q^2 - a^2)      outer horizon radius [cm]
    A      = 4 pi (r_plus^2 + a^2)          horizon area [cm^2]
    S      = A / (4 l_P^2)                  entropy [nats]
    T      = (2 c hbar / A) (r_plus - M)    temperature [erg]

The hole exists only for Q^2 + a^2 <= M^2.  On that boundary (extremal
holes) the temperature vanishes; for q = j = 0 the horizon radius reduces
to the Schwarzschild value 2 G m / c^2.

Energy conservation takes the first-law form

    d(m c^2) = Theta dA + Phi dq + Omega dj

with Theta = c^4 (r_plus - M) / (2 G A) [erg cm^-2], the horizon electric
potential Phi = q r_plus / (r_plus^2 + a^2) [statvolt], and the horizon
angular frequency Omega = j / (m (r_plus^2 + a^2)) [s^-1].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import (
    CONSTANTS,
    geometrized_charge,
    geometrized_mass,
    spin_length,
)
from .errors import DomainError, NakedSingularityError, SubPlanckMassError

#: Relative slack accepted on the existence test Q^2 + a^2 <= M^2.
EPS_EXTREMAL = 1e-12


@dataclass(frozen=True)
class BlackHole:
    """A validated Kerr-Newman black hole.

    Build instances through :func:`make_black_hole`, which enforces the
    Planck-mass floor and the existence condition.

    Attributes
    ----------
    m : float
        Mass [g].
    q : float
        Charge [esu].
    j : float
        Angular momentum [erg s].
    M, Q, a : float
        Derived length scales [cm], see module docstring.
    r_plus : float
        Outer horizon radius [cm].
    """

    m: float
    q: float
    j: float
    M: float
    Q: float
    a: float
    r_plus: float

    @property
    def is_schwarzschild(self) -> bool:
        return self.q == 0.0 and self.j == 0.0


@dataclass(frozen=True)
class FirstLawPotentials:
    """Conjugate potentials of the black hole first law.

    theta [erg cm^-2] multiplies area changes, phi [statvolt] charge
    changes and omega [s^-1] angular-momentum changes.  theta vanishes
    exactly at extremality.
    """

    theta: float
    phi: float
    omega: float


def make_black_hole(m: float, q: float = 0.0, j: float = 0.0) -> BlackHole:
    """Construct and validate a black hole from (mass, charge, spin).

    Parameters
    ----------
    m : float
        Mass [g]; must be at least one Planck mass, below which no
        horizon forms.
    q : float
        Charge [esu].
    j : float
        Angular momentum [erg s].

    Raises
    ------
    SubPlanckMassError
        If m is below the Planck mass.
    NakedSingularityError
        If Q^2 + a^2 exceeds M^2 (beyond a 1e-12 relative slack).
    """
    if m < CONSTANTS.planck_mass:
        raise SubPlanckMassError(
            f"mass {m} g is below the Planck mass {CONSTANTS.planck_mass:.6e} g")
    M = geometrized_mass(m)
    Q = geometrized_charge(q)
    a = spin_length(j, m)
    s2 = Q * Q + a * a
    if s2 > M * M * (1.0 + EPS_EXTREMAL):
        raise NakedSingularityError(
            f"no horizon: Q^2 + a^2 = {s2:.6e} cm^2 exceeds M^2 = {M*M:.6e} cm^2")
    # (M - s)(M + s) instead of M^2 - s^2: avoids cancellation near extremality.
    s = math.sqrt(s2)
    disc = (M - s) * (M + s)
    # Within the existence slack the hole is extremal; clamping keeps the
    # square root from amplifying last-digit noise into a fake temperature.
    if disc < EPS_EXTREMAL * M * M:
        disc = 0.0
    r_plus = M + math.sqrt(disc)
    return BlackHole(m=m, q=q, j=j, M=M, Q=Q, a=a, r_plus=r_plus)


def horizon_area(bh: BlackHole) -> float:
    """Event horizon area A = 4 pi (r_plus^2 + a^2) [cm^2]."""
    return 4.0 * math.pi * (bh.r_plus**2 + bh.a**2)


def entropy(bh: BlackHole) -> float:
    """Black hole entropy A / (4 l_P^2) [nats]."""
    return horizon_area(bh) / (4.0 * CONSTANTS.planck_length**2)


def temperature(bh: BlackHole) -> float:
    """Radiation temperature (2 c hbar / A)(r_plus - M) [erg].

    Zero exactly for extremal holes; reduces to hbar c / (8 pi M) in the
    Schwarzschild case.
    """
    return 2.0 * CONSTANTS.c * CONSTANTS.hbar * (bh.r_plus - bh.M) / horizon_area(bh)


def potentials(bh: BlackHole) -> FirstLawPotentials:
    """First-law potentials (Theta, Phi, Omega) of the hole.

    Phi is the electric potential at the horizon; Omega is the angular
    frequency with which the horizon entrains infalling matter.
    """
    A = horizon_area(bh)
    w2 = bh.r_plus**2 + bh.a**2
    theta = CONSTANTS.c**4 * (bh.r_plus - bh.M) / (2.0 * CONSTANTS.G * A)
    phi = bh.q * bh.r_plus / w2
    omega = bh.j / (bh.m * w2)
    return FirstLawPotentials(theta=theta, phi=phi, omega=omega)


def first_law_residual(bh: BlackHole, dm: float, dq: float, dj: float) -> float:
    """Relative closure error of d(mc^2) = Theta dA + Phi dq + Omega dj.

    dA is evaluated by a central finite difference of the horizon area
    under the joint perturbation (dm, dq, dj), so the residual is
    O(perturbation^2) for an exact first law.

    Parameters
    ----------
    dm, dq, dj : float
        Small perturbations; each must stay within 1e-6 of the hole's
        natural scale for that parameter (m, extremal charge, extremal
        spin respectively).

    Raises
    ------
    DomainError
        If all perturbations vanish (the residual ratio is undefined),
        if a perturbation is too large, or if the perturbed hole would
        cross extremality.
    """
    if dm == 0.0 and dq == 0.0 and dj == 0.0:
        raise DomainError("all perturbations are zero; residual is undefined")
    q_scale = bh.M * CONSTANTS.c**2 / math.sqrt(CONSTANTS.G)
    j_scale = bh.m * CONSTANTS.c * bh.M
    if abs(dm) > 1e-6 * bh.m or abs(dq) > 1e-6 * q_scale or abs(dj) > 1e-6 * j_scale:
        raise DomainError("perturbations must be <= 1e-6 of the hole's scales")
    plus = make_black_hole(bh.m + dm, bh.q + dq, bh.j + dj)
    minus = make_black_hole(bh.m - dm, bh.q - dq, bh.j - dj)
    dA = (horizon_area(plus) - horizon_area(minus)) / 2.0
    pots = potentials(bh)
    dE = CONSTANTS.c**2 * dm
    numer = abs(dE - pots.theta * dA - pots.phi * dq - pots.omega * dj)
    denom = abs(dE) if dm != 0.0 else max(
        abs(pots.theta * dA), abs(pots.phi * dq), abs(pots.omega * dj))
    return numer / denom


def h_factors(bh: BlackHole) -> tuple[float, float]:
    """Entropy and temperature ratios to the equal-mass Schwarzschild hole.

    Returns (h1, h2) with h1 = S(bh)/S(Schwarzschild) and
    h2 = T(bh)/T(Schwarzschild); both equal 1 exactly for q = j = 0 and
    lie in [0, 1] over the whole existence domain.
    """
    ref = make_black_hole(bh.m)
    h1 = entropy(bh) / entropy(ref)
    h2 = temperature(bh) / temperature(ref)
    return h1, h2


def mean_density(m: float) -> float:
    """Mean density 3 c^6 / (32 pi G^3 m^2) [g cm^-3] of a Schwarzschild hole.

    The mass inside its own horizon sphere of radius 2 G m / c^2; scales
    as m^-2, so small holes are dense and giant ones can be thinner
    than water.
    """
    if m <= 0:
        raise DomainError(f"mass must be positive, got {m}")
    return 3.0 * CONSTANTS.c**6 / (32.0 * math.pi * CONSTANTS.G**3 * m**2)
