"""Bound-state spectra of exactly solvable wells, three independent ways.

The catalog covers the nonrelativistic and relativistic Coulomb problems
(spinless and spin-1/2), the Kratzer molecular potential, their n-dimensional
Kepler/oscillator extensions and the two Poeschl-Teller wells.  Each spectrum
can be computed from the closed eigenvalue formula, from a fully numeric
Bohr-Sommerfeld engine with the Langer-modified phase integrand, and from a
Numerov shooting solver for the original equation, and the package
machine-checks the coefficient identity that makes the first two coincide
for the whole Sommerfeld class.
"""

from .errors import *  # noqa: F401,F403
from .errors import SpectraLabError
from .fine_structure import expansion_coefficients, level_spread, spread_ratio
from .integrals import (
    hyperbolic_integral,
    quadratic_turning_points,
    sommerfeld_integral,
    trig_integral,
)
from .nikiforov_uvarov import (
    HypergeometricCoefficients,
    PuzzleReport,
    Reduction,
    SommerfeldCoefficients,
    hypergeometric_form,
    nu_eigenvalue_residual,
    reduce_hypergeometric,
    select_bound_state_branch,
    sommerfeld_quantization,
    verify_puzzle,
)
from .numerov import (
    RadialGrid,
    ShootingResult,
    convergence_order,
    count_nodes,
    default_grid,
    oracle_spectrum,
    solve_eigenvalue,
)
from .phase import PhaseIntegralResult, find_turning_points, phase_integral, quantize_level, wkb_spectrum
from .potentials import (
    PhaseTriple,
    PotentialKind,
    PotentialModel,
    abc_coefficients,
    bound_energy_window,
    build_model,
    dimension_lift,
    effective_momentum_squared,
    energy_scale,
    langer_term,
)
from .spectra import EnergyLevel, QuantumState, exact_level, level_count, wkb_closed_level

__version__ = "0.1.0"
