"""Critical lattices, packing densities, and extremal hexagons of planar
L^p balls D_p = {|x|^p + |y|^p <= 1} and their dyadic dilates 2^m * D_p."""

from .domain import (
    BallSpec,
    Branch,
    DomainClass,
    LatticeBasis,
    ModuliPoint,
    PackingReport,
    classify,
    lp_gauge,
    lp_power_sum,
)
from .dyadic import (
    DirectSystem,
    SystemKind,
    lattice_chain,
    limit_membership,
    subgroup_index,
    transition,
)
from .lattice import (
    CriticalLatticeKind,
    admissibility_check,
    build_lattice,
    critical_lattice,
    enumerate_points,
)
from .moduli import (
    contact_residual,
    moduli_delta,
    moduli_point,
    oracle_min,
    solve_tau_of_sigma,
)
from .packing import (
    HexagonPair,
    QuadratureError,
    ball_area,
    boundary_points,
    circumscribed_hexagon,
    hexagon_pair,
    inscribed_hexagon,
    kind_for_branch,
    packing_density,
    verify_nonoverlap,
)
from .solvers import (
    CriticalConstants,
    SolverError,
    critical_constants,
    critical_determinant,
    default_davis_constant,
    delta_branch0,
    delta_branch1,
    sigma_p,
    solve_davis_constant,
    solve_tau_p,
)

__version__ = "0.1.0"

__all__ = [
    "BallSpec",
    "Branch",
    "CriticalConstants",
    "CriticalLatticeKind",
    "DirectSystem",
    "DomainClass",
    "HexagonPair",
    "LatticeBasis",
    "ModuliPoint",
    "PackingReport",
    "QuadratureError",
    "SolverError",
    "SystemKind",
    "admissibility_check",
    "ball_area",
    "boundary_points",
    "build_lattice",
    "circumscribed_hexagon",
    "classify",
    "contact_residual",
    "critical_constants",
    "critical_determinant",
    "critical_lattice",
    "default_davis_constant",
    "delta_branch0",
    "delta_branch1",
    "enumerate_points",
    "hexagon_pair",
    "inscribed_hexagon",
    "kind_for_branch",
    "lattice_chain",
    "limit_membership",
    "lp_gauge",
    "lp_power_sum",
    "moduli_delta",
    "moduli_point",
    "oracle_min",
    "packing_density",
    "sigma_p",
    "solve_davis_constant",
    "solve_tau_of_sigma",
    "solve_tau_p",
    "subgroup_index",
    "transition",
    "verify_nonoverlap",
]
