"""Static entropy/information bounds with explicit applicability checks.

Four ceilings on the entropy S [nats] of a material system of rest energy
E [erg] and largest radius R [cm]:

    holographic      S <= A / (4 l_P^2)          (A = enclosing area)
    universal        S <= 2 pi R E / (hbar c)
    weak universal   S <= 8 pi nu zeta R E / (c hbar)
    extensive (Gour) S <= (E R / hbar c)^(3/4)

The universal and weak bounds assume a composite, weakly self-gravitating
system; the extensive bound additionally assumes thermodynamic
extensivity.  Inapplicable bounds are still computed and flagged, never
dropped.  A Schwarzschild hole saturates the universal bound exactly
(E = m c^2, R = horizon radius).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import CONSTANTS, nats_to_bits
from .errors import DomainError

#: A system counts as composite when E R / (c hbar) reaches this value.
COMPOSITE_THRESHOLD = 10.0
#: Weak self-gravity requires G E / (c^4 R) at or below this value.
WEAK_GRAVITY_THRESHOLD = 1e-2
#: Default irreversibility factor / hole-to-system size ratio for the weak bound.
DEFAULT_NU = 1.5
DEFAULT_ZETA = 10.0


@dataclass(frozen=True)
class MaterialSystem:
    """A bounded physical system: rest energy, largest radius, optional entropy.

    entropy may be None when only asking for capacity limits.
    """

    energy: float
    radius: float
    entropy: float | None = None
    label: str = ""

    def __post_init__(self) -> None:
        if self.energy <= 0:
            raise DomainError(f"energy must be positive, got {self.energy}")
        if self.radius <= 0:
            raise DomainError(f"radius must be positive, got {self.radius}")
        if self.entropy is not None and self.entropy < 0:
            raise DomainError(f"entropy must be non-negative, got {self.entropy}")


@dataclass(frozen=True)
class BoundEntry:
    name: str
    limit_nats: float
    limit_bits: float
    applicable: bool
    applicability_reason: str


@dataclass(frozen=True)
class BoundReport:
    """All bounds evaluated for one system, ordered and applicability-flagged."""

    label: str
    compositeness: float
    weak_gravity_ratio: float
    entries: tuple[BoundEntry, ...]
    tightest_applicable: str
    stored_entropy: float | None
    violations: tuple[str, ...]


def compositeness(sys: MaterialSystem) -> float:
    """Size in units of the system's own Compton length: E R / (c hbar)."""
    return sys.energy * sys.radius / (CONSTANTS.c * CONSTANTS.hbar)


def weak_gravity_ratio(sys: MaterialSystem) -> float:
    """Gravitational radius over system radius: G E / (c^4 R).

    1/2 for a Schwarzschild hole; tiny for laboratory systems.
    """
    return CONSTANTS.G * sys.energy / (CONSTANTS.c**4 * sys.radius)


def is_composite(sys: MaterialSystem,
                 threshold: float = COMPOSITE_THRESHOLD) -> bool:
    return compositeness(sys) >= threshold


def is_weakly_gravitating(sys: MaterialSystem,
                          threshold: float = WEAK_GRAVITY_THRESHOLD) -> bool:
    return weak_gravity_ratio(sys) <= threshold


def holographic_bound(area: float) -> float:
    """Entropy ceiling area / (4 l_P^2) [nats] inside a closed surface."""
    if area <= 0:
        raise DomainError(f"area must be positive, got {area}")
    return area / (4.0 * CONSTANTS.planck_length**2)


def universal_bound(sys: MaterialSystem, coefficient: float = 2.0 * math.pi) -> float:
    """Energy-radius entropy ceiling, coefficient * R E / (hbar c) [nats]."""
    return coefficient * sys.radius * sys.energy / (CONSTANTS.hbar * CONSTANTS.c)


def weak_universal_bound(sys: MaterialSystem, nu: float = DEFAULT_NU,
                         zeta: float = DEFAULT_ZETA) -> float:
    """Weak form 8 pi nu zeta R E / (c hbar) [nats] from the infall argument.

    zeta is the hole-to-system size ratio of the underlying thought
    experiment and must be at least 1.
    """
    if zeta < 1.0:
        raise DomainError(f"zeta must be >= 1, got {zeta}")
    return (8.0 * math.pi * nu * zeta * sys.radius * sys.energy
            / (CONSTANTS.c * CONSTANTS.hbar))


def gour_bound(sys: MaterialSystem) -> float:
    """Ceiling (E R / hbar c)^(3/4) [nats] for thermodynamically extensive systems.

    Coefficient fixed at 1; the exact species-dependent prefactor is an
    open point, so treat results as order-of-magnitude.
    """
    return compositeness(sys) ** 0.75


def bound_report(sys: MaterialSystem, enclosing_area: float | None = None,
                 nu: float = DEFAULT_NU, zeta: float = DEFAULT_ZETA,
                 composite_threshold: float = COMPOSITE_THRESHOLD,
                 weak_gravity_threshold: float = WEAK_GRAVITY_THRESHOLD) -> BoundReport:
    """Evaluate every bound for one system and rank the applicable ones.

    enclosing_area defaults to the minimal sphere 4 pi R^2 and must not
    be smaller than the system.
    """
    min_area = 4.0 * math.pi * sys.radius**2
    if enclosing_area is None:
        enclosing_area = min_area
    elif enclosing_area < min_area * (1.0 - 1e-12):
        raise DomainError(
            f"enclosing area {enclosing_area} cm^2 is smaller than the "
            f"system's own sphere {min_area:.6e} cm^2")

    comp = compositeness(sys)
    grav = weak_gravity_ratio(sys)
    composite = comp >= composite_threshold
    weak = grav <= weak_gravity_threshold

    reasons = []
    if not composite:
        reasons.append(f"not composite (ER/c hbar = {comp:.3e} < {composite_threshold})")
    if not weak:
        reasons.append(f"not weakly gravitating (GE/c^4R = {grav:.3e} > "
                       f"{weak_gravity_threshold})")
    matter_reason = "; ".join(reasons) if reasons else "composite and weakly gravitating"
    gour_reason = ("extensivity assumed; " + matter_reason) if composite else \
        f"not composite (ER/c hbar = {comp:.3e} < {composite_threshold})"

    holo = holographic_bound(enclosing_area)
    uni = universal_bound(sys)
    weak_uni = weak_universal_bound(sys, nu=nu, zeta=zeta)
    gour = gour_bound(sys)

    entries = (
        BoundEntry("holographic", holo, nats_to_bits(holo), True,
                   "isolated system inside a closed surface"),
        BoundEntry("universal", uni, nats_to_bits(uni),
                   composite and weak, matter_reason),
        BoundEntry("weak_universal", weak_uni, nats_to_bits(weak_uni),
                   composite and weak, matter_reason),
        BoundEntry("gour", gour, nats_to_bits(gour), composite, gour_reason),
    )

    applicable = [e for e in entries if e.applicable]
    tightest = min(applicable, key=lambda e: e.limit_nats).name
    if weak:
        # Guaranteed by geometry: the ratio is 2 G E/(c^4 R) times
        # (4 pi R^2 / area) <= 2 * weak_gravity_ratio < 1.
        assert uni <= holo

    violations = tuple(
        e.name for e in applicable
        if sys.entropy is not None and sys.entropy > e.limit_nats * (1.0 + 1e-12))
    return BoundReport(label=sys.label, compositeness=comp,
                       weak_gravity_ratio=grav, entries=entries,
                       tightest_applicable=tightest,
                       stored_entropy=sys.entropy, violations=violations)
