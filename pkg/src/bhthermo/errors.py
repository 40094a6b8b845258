"""Exception types shared across the toolkit."""


class DomainError(ValueError):
    """Input outside the physical domain of a formula."""


class SubPlanckMassError(DomainError):
    """Mass below the Planck mass, where no horizon can form."""


class NakedSingularityError(DomainError):
    """Charge and spin exceed what the mass can hold (Q^2 + a^2 > M^2)."""
