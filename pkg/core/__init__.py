from .errors import (
    BecQubitsError,
    ConfigError,
    ParameterDomainError,
    StateError,
    GridRangeError,
    NotBellDiagonalError,
    QuadratureError,
    IntegrationError,
    InconclusiveError,
    ValidationFailure,
)
from .params import (
    PhysicalParams,
    ReservoirParams,
    to_dimensionless,
    scale_scattering,
    A_RB,
    AMU,
    BOHR_RADIUS,
)
from .states import (
    TwoQubitState,
    Sign,
    BASIS,
    make_werner,
    make_product_plus,
    basis_state,
    prepare_werner_via_protocol,
    parse_state_spec,
    SQRT_SWAP,
    SQRT_SWAP_AS_PRINTED,
    SWAP,
)
from .validation import StateReport, validate_state

__all__ = [
    'BecQubitsError', 'ConfigError', 'ParameterDomainError', 'StateError',
    'GridRangeError', 'NotBellDiagonalError', 'QuadratureError', 'IntegrationError',
    'InconclusiveError', 'ValidationFailure',
    'PhysicalParams', 'ReservoirParams', 'to_dimensionless', 'scale_scattering',
    'A_RB', 'AMU', 'BOHR_RADIUS',
    'TwoQubitState', 'Sign', 'BASIS', 'make_werner', 'make_product_plus',
    'basis_state', 'prepare_werner_via_protocol', 'parse_state_spec',
    'SQRT_SWAP', 'SQRT_SWAP_AS_PRINTED', 'SWAP',
    'StateReport', 'validate_state',
]

__version__ = "0.1.0"
