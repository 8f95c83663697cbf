from .dephasing_map import (
    ElementAssignment,
    ASSIGNMENT,
    apply_map,
    apply_factors,
    evolve_on_grid,
    two_point_propagator,
    write_density_trajectory,
)
from .master_equation import me_rhs, integrate_me, MasterEquationTrajectory
from .non_markov import NonMarkovReport, non_markov_report

__all__ = [
    'ElementAssignment', 'ASSIGNMENT', 'apply_map', 'apply_factors', 'evolve_on_grid',
    'two_point_propagator', 'write_density_trajectory',
    'me_rhs', 'integrate_me', 'MasterEquationTrajectory',
    'NonMarkovReport', 'non_markov_report',
]

__version__ = "0.1.0"
