"""Black hole thermodynamics, Hawking evaporation, entropy bounds and
GSL channel-capacity limits, all in Gaussian CGS units."""

from .bounds import (
    BoundEntry,
    BoundReport,
    MaterialSystem,
    bound_report,
    compositeness,
    gour_bound,
    holographic_bound,
    universal_bound,
    weak_gravity_ratio,
    weak_universal_bound,
)
from .channel import (
    CapacityReport,
    Channel,
    ConsistencyReport,
    bremermann_rate,
    capacity_bound,
    characteristic_power,
    consistency_check,
    gsl_bound,
    optimal_xi,
    pendry_capacity,
)
from .constants import (
    CODATA2018,
    CONSTANTS,
    PhysicalConstants,
    energy_temperature_to_kelvin,
    geometrized_charge,
    geometrized_mass,
    nats_to_bits,
    spin_length,
)
from .errors import DomainError, NakedSingularityError, SubPlanckMassError
from .evaporation import (
    EmissionParameters,
    entropy_emission_rate,
    hawking_flux,
    hawking_power,
    lifetime,
    mass_loss_rate,
)
from .gedanken import (
    EntropyLedger,
    GedankenReport,
    capsule_lowering,
    drop_distance,
    infall_experiment,
    merger,
    susskind_collapse,
)
from .kerr_newman import (
    BlackHole,
    FirstLawPotentials,
    entropy,
    first_law_residual,
    h_factors,
    horizon_area,
    make_black_hole,
    mean_density,
    potentials,
    temperature,
)

__version__ = "0.1.0"
