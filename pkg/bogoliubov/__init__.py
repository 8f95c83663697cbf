from .spectrum import (
    DispersionPoint,
    dispersion,
    thermal_factor,
    sinc2,
    geometric_single,
    geometric_cross,
)

__all__ = [
    'DispersionPoint',
    'dispersion',
    'thermal_factor',
    'sinc2',
    'geometric_single',
    'geometric_cross',
]

__version__ = "0.1.0"
