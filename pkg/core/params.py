"""
Physical and dimensionless parameter sets.

Units: hbar = m_B = sigma = 1. Energies are measured in hbar^2/(m_B sigma^2),
times in m_B sigma^2/hbar and wavenumbers in 1/sigma.
"""

import math
import logging
from dataclasses import dataclass, asdict, fields, replace
from typing import Dict

from scipy import constants

from core.errors import ParameterDomainError

logger = logging.getLogger(__name__)

AMU = constants.physical_constants["atomic mass constant"][0]
BOHR_RADIUS = constants.physical_constants["Bohr radius"][0]
# 87Rb background scattering length
A_RB = 100.4 * BOHR_RADIUS


@dataclass(frozen=True)
class PhysicalParams:
    m_A: float
    m_B: float
    a_B: float
    a_AB: float
    n0: float
    sigma: float
    L: float
    D: float
    T: float

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, (int, float)) or not math.isfinite(value) or value <= 0:
                raise ParameterDomainError(f"{f.name} must be a finite positive number, got {value!r}")

    @property
    def a_B_over_aRb(self) -> float:
        return self.a_B / A_RB

    def time_unit_seconds(self) -> float:
        """Seconds per dimensionless time unit m_B sigma^2 / hbar."""
        return self.m_B * self.sigma ** 2 / constants.hbar

    def to_dimensionless(self) -> "ReservoirParams":
        return to_dimensionless(self)

    def as_dict(self) -> Dict[str, float]:
        return asdict(self)


@dataclass(frozen=True)
class ReservoirParams:
    u: float
    gAB: float
    n0d: float
    theta: float
    Ld: float
    Dd: float

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ParameterDomainError(f"{f.name} must be a finite number, got {value!r}")
            # theta = 0 is the zero-temperature reservoir
            if f.name == "theta":
                if value < 0:
                    raise ParameterDomainError(f"theta must be >= 0, got {value!r}")
            elif value <= 0:
                raise ParameterDomainError(f"{f.name} must be > 0, got {value!r}")

    @property
    def prefactor(self) -> float:
        """Overall kernel prefactor 2 gAB^2 n0d / pi^2."""
        return 2.0 * self.gAB ** 2 * self.n0d / math.pi ** 2

    @property
    def sound_speed(self) -> float:
        return math.sqrt(self.u)

    def replace(self, **changes) -> "ReservoirParams":
        return replace(self, **changes)

    def as_dict(self) -> Dict[str, float]:
        return asdict(self)


def to_dimensionless(p: PhysicalParams) -> ReservoirParams:
    """Map SI parameters onto the dimensionless reservoir description."""
    g_b = 4.0 * math.pi * p.a_B / p.sigma
    g_ab = 2.0 * math.pi * (p.a_AB / p.sigma) * (1.0 + p.m_B / p.m_A)
    n0d = p.n0 * p.sigma ** 3
    theta = constants.k * p.T * p.m_B * p.sigma ** 2 / constants.hbar ** 2
    params = ReservoirParams(
        u=g_b * n0d,
        gAB=g_ab,
        n0d=n0d,
        theta=theta,
        Ld=p.L / p.sigma,
        Dd=p.D / p.sigma,
    )
    logger.debug(f"Dimensionless parameters: {params}")
    return params


def scale_scattering(params: ReservoirParams, ratio: float) -> ReservoirParams:
    """Rescale the boson-boson scattering length by ``ratio`` (u is linear in a_B)."""
    if ratio <= 0:
        raise ParameterDomainError(f"scattering-length ratio must be > 0, got {ratio}")
    return params.replace(u=params.u * ratio)


def reservoir_from_dict(data: Dict[str, float]) -> ReservoirParams:
    return ReservoirParams(**{f.name: float(data[f.name]) for f in fields(ReservoirParams)})


def physical_from_dict(data: Dict[str, float]) -> PhysicalParams:
    return PhysicalParams(**{f.name: float(data[f.name]) for f in fields(PhysicalParams)})
