"""
Bogoliubov dispersion, thermal occupation factor and the geometric interference
factors of the double-well couplings.

eps_k is the free-particle energy k^2/2 (standard Bogoliubov theory) and the
single symbol u stands for g_B n0 in both the dispersion and the kernel
denominator (eps + 2u).
"""

import logging
from dataclasses import dataclass
from typing import Union

import numpy as np

from core.errors import ParameterDomainError

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

SINC_SERIES_CUTOFF = 1e-4
COTH_SERIES_CUTOFF = 1e-4


@dataclass(frozen=True)
class DispersionPoint:
    k: ArrayLike
    eps: ArrayLike
    E: ArrayLike


def dispersion(k: ArrayLike, u: float) -> DispersionPoint:
    k_arr = np.asarray(k, dtype=float)
    if np.any(k_arr < 0) or u < 0:
        raise ParameterDomainError(f"dispersion requires k >= 0 and u >= 0 (u={u})")
    eps = 0.5 * k_arr ** 2
    energy = np.sqrt(eps * (eps + 2.0 * u))
    if np.ndim(k) == 0:
        return DispersionPoint(float(k_arr), float(eps), float(energy))
    return DispersionPoint(k_arr, eps, energy)


def thermal_factor(E: ArrayLike, theta: float) -> ArrayLike:
    """coth(E / 2 theta); identically 1 at zero temperature."""
    E_arr = np.asarray(E, dtype=float)
    if theta < 0 or np.any(E_arr < 0):
        raise ParameterDomainError("thermal_factor requires E >= 0 and theta >= 0")
    if theta == 0:
        out = np.ones_like(E_arr)
    else:
        x = E_arr / (2.0 * theta)
        with np.errstate(divide="ignore"):
            series = 1.0 / x + x / 3.0
            direct = 1.0 / np.tanh(np.where(x < COTH_SERIES_CUTOFF, 1.0, x))
        out = np.where(x < COTH_SERIES_CUTOFF, series, direct)
    return float(out) if np.ndim(E) == 0 else out


def sinc2(x: ArrayLike) -> ArrayLike:
    """sin(x)/x with the removable singularity filled in."""
    x_arr = np.asarray(x, dtype=float)
    small = np.abs(x_arr) < SINC_SERIES_CUTOFF
    x2 = x_arr * x_arr
    series = 1.0 - x2 / 6.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 5040.0
    safe = np.where(small, 1.0, x_arr)
    out = np.where(small, series, np.sin(safe) / safe)
    return float(out) if np.ndim(x) == 0 else out


def geometric_single(k: ArrayLike, Ld: float) -> ArrayLike:
    return 1.0 - sinc2(2.0 * np.asarray(k, dtype=float) * Ld)


def geometric_cross(k: ArrayLike, Dd: float, Ld: float) -> ArrayLike:
    """Cross-talk factor; the Gamma_+- bracket is 2*geometric_single +- geometric_cross."""
    k = np.asarray(k, dtype=float)
    return (
        -2.0 * sinc2(2.0 * k * Dd)
        + sinc2(2.0 * k * (Dd + Ld))
        + sinc2(2.0 * k * (Dd - Ld))
    )
