from .entropy import partial_trace, von_neumann_entropy, mutual_information
from .concurrence import (
    concurrence,
    concurrence_werner,
    concurrence_x_state,
    is_x_state,
    spin_flip,
    wootters_lambdas,
    wootters_diagnostics,
)
from .discord import (
    bell_correlations,
    is_bell_diagonal,
    discord,
    discord_bell_diagonal,
    discord_bruteforce,
)
from .trajectory import CorrelationTrajectory, correlation_trajectory

__all__ = [
    'partial_trace', 'von_neumann_entropy', 'mutual_information',
    'concurrence', 'concurrence_werner', 'concurrence_x_state', 'is_x_state',
    'spin_flip', 'wootters_lambdas', 'wootters_diagnostics',
    'bell_correlations', 'is_bell_diagonal', 'discord', 'discord_bell_diagonal',
    'discord_bruteforce',
    'CorrelationTrajectory', 'correlation_trajectory',
]

__version__ = "0.1.0"
