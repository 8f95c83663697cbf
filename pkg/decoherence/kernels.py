"""
Decoherence factors of the two-qubit dephasing model.

With C = 2 gAB^2 n0d / pi^2 and E, eps from the Bogoliubov dispersion:

    Gamma_0(t) = C int dk k^2 e^{-k^2/2} sin^2(E t/2) / (E (eps + 2u)) coth(E/2theta) (1 - sinc 2kL)
    delta(t)   = same kernel with the cross factor g_cross(k)
    Gamma_+-   = 2 Gamma_0 +- delta
    Pi_zz(t)   = -(C/2) int dk k^2 e^{-k^2/2} g_cross(k) (E t - sin E t) / (E (eps + 2u))

The printed single-qubit kernel carries sin^2(E/2) without t; it is read as
sin^2(E t/2), the only reading with Gamma(0) = 0. Pi_zz follows from the exact
conditionally displaced oscillator solution per mode and is temperature
independent. Coherence (a, b) picks up the phase Pi_zz (zz_a - zz_b) / 4.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

import numpy as np

from bogoliubov.spectrum import (
    dispersion,
    thermal_factor,
    sinc2,
    geometric_single,
    geometric_cross,
)
from core.errors import ParameterDomainError
from core.params import ReservoirParams
from decoherence.quadrature import panel_quadrature, adaptive_quad

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-8
K_MAX = 10.0
_PHASE_SERIES_CUTOFF = 1e-3


class Channel(str, Enum):
    SINGLE = "0"
    PLUS = "+"
    MINUS = "-"

    @classmethod
    def parse(cls, value: Union["Channel", str, int]) -> "Channel":
        if isinstance(value, Channel):
            return value
        for member in cls:
            if str(value) == member.value:
                return member
        raise ParameterDomainError(f"channel must be one of 0, +, -; got {value!r}")


@dataclass(frozen=True)
class KernelValues:
    t: float
    gamma0: float
    delta: float
    rate0: float
    rate_delta: float
    pi_zz: float
    pi_rate: float

    @property
    def gamma_plus(self) -> float:
        return 2.0 * self.gamma0 + self.delta

    @property
    def gamma_minus(self) -> float:
        return 2.0 * self.gamma0 - self.delta

    @property
    def rate_plus(self) -> float:
        return 2.0 * self.rate0 + self.rate_delta

    @property
    def rate_minus(self) -> float:
        return 2.0 * self.rate0 - self.rate_delta

    def gamma(self, channel: Union[Channel, str]) -> float:
        channel = Channel.parse(channel)
        return {Channel.SINGLE: self.gamma0, Channel.PLUS: self.gamma_plus,
                Channel.MINUS: self.gamma_minus}[channel]

    def rate(self, channel: Union[Channel, str]) -> float:
        channel = Channel.parse(channel)
        return {Channel.SINGLE: self.rate0, Channel.PLUS: self.rate_plus,
                Channel.MINUS: self.rate_minus}[channel]


class KernelEvaluator:
    """Evaluates every kernel at one time on a shared set of quadrature nodes."""

    def __init__(self, params: ReservoirParams, tol: float = DEFAULT_TOL, k_max: float = K_MAX,
                 cross_talk: bool = True, max_levels: int = 6):
        if tol <= 0:
            raise ParameterDomainError(f"quadrature tolerance must be > 0, got {tol}")
        self.params = params
        self.tol = tol
        self.k_max = k_max
        self.cross_talk = cross_talk
        self.max_levels = max_levels

    def _static_factors(self, k: np.ndarray):
        p = self.params
        disp = dispersion(k, p.u)
        base = p.prefactor * k ** 2 * np.exp(-0.5 * k ** 2) / (disp.E * (disp.eps + 2.0 * p.u))
        decay = base * thermal_factor(disp.E, p.theta)
        single = geometric_single(k, p.Ld)
        cross = geometric_cross(k, p.Dd, p.Ld) if self.cross_talk else np.zeros_like(k)
        return disp.E, base, decay, single, cross

    def evaluate(self, t: float) -> KernelValues:
        if t < 0:
            raise ParameterDomainError(f"time must be >= 0, got {t}")
        if t == 0:
            return KernelValues(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)

        def integrands(k):
            energy, base, decay, single, cross = self._static_factors(k)
            x = energy * t
            half_sin_sq = np.sin(0.5 * x) ** 2
            rate_factor = 0.5 * energy * np.sin(x)
            phase_factor = np.where(
                x < _PHASE_SERIES_CUTOFF, x ** 3 / 6.0 - x ** 5 / 120.0, x - np.sin(x)
            )
            return np.vstack([
                decay * single * half_sin_sq,
                decay * cross * half_sin_sq,
                decay * single * rate_factor,
                decay * cross * rate_factor,
                -0.5 * base * cross * phase_factor,
                -base * cross * energy * half_sin_sq,
            ])

        result = panel_quadrature(integrands, t, self.params, self.tol, self.k_max, self.max_levels)
        return KernelValues(t, *(float(v) for v in result.values))

    def stationary(self) -> KernelValues:
        """Time-averaged kernels: sin^2 -> 1/2. pi_rate holds the asymptotic phase velocity."""

        def integrands(k):
            energy, base, decay, single, cross = self._static_factors(k)
            zeros = np.zeros_like(k)
            return np.vstack([
                0.5 * decay * single,
                0.5 * decay * cross,
                zeros,
                zeros,
                zeros,
                -0.5 * base * cross * energy,
            ])

        result = panel_quadrature(integrands, 0.0, self.params, self.tol, self.k_max, self.max_levels)
        return KernelValues(float("inf"), *(float(v) for v in result.values))


def gamma0(t: float, p: ReservoirParams, tol: float = DEFAULT_TOL) -> float:
    return KernelEvaluator(p, tol).evaluate(t).gamma0


def delta(t: float, p: ReservoirParams, tol: float = DEFAULT_TOL) -> float:
    return KernelEvaluator(p, tol).evaluate(t).delta


def gamma_pm(t: float, p: ReservoirParams, tol: float = DEFAULT_TOL) -> Tuple[float, float]:
    values = KernelEvaluator(p, tol).evaluate(t)
    return values.gamma_plus, values.gamma_minus


def gamma_rate(t: float, p: ReservoirParams, tol: float = DEFAULT_TOL,
               which: Union[Channel, str] = Channel.SINGLE, cross_talk: bool = True) -> float:
    return KernelEvaluator(p, tol, cross_talk=cross_talk).evaluate(t).rate(which)


def gamma_infinity(p: ReservoirParams, tol: float = DEFAULT_TOL,
                   which: Union[Channel, str] = Channel.SINGLE, cross_talk: bool = True) -> float:
    return KernelEvaluator(p, tol, cross_talk=cross_talk).stationary().gamma(which)


def pi_zz(t: float, p: ReservoirParams, tol: float = DEFAULT_TOL) -> float:
    return KernelEvaluator(p, tol).evaluate(t).pi_zz


def pi_zz_slope(p: ReservoirParams, tol: float = DEFAULT_TOL) -> float:
    """Long-time phase velocity d(Pi_zz)/dt."""
    return KernelEvaluator(p, tol).stationary().pi_rate


def kernel_integrand(k, t: float, p: ReservoirParams, channel: Union[Channel, str] = Channel.SINGLE):
    """
    Pointwise decay integrand, written with the printed bracket for the +- channels.

    The k = 0 limit is 0.
    """
    channel = Channel.parse(channel)
    k = np.asarray(k, dtype=float)
    disp = dispersion(k, p.u)
    positive = disp.E > 0
    energy = np.where(positive, disp.E, 1.0)
    kernel = (
        p.prefactor * k ** 2 * np.exp(-0.5 * k ** 2)
        * np.sin(0.5 * energy * t) ** 2 / (energy * (disp.eps + 2.0 * p.u))
        * thermal_factor(energy, p.theta)
    )
    two_k = 2.0 * k
    if channel is Channel.SINGLE:
        bracket = 1.0 - sinc2(two_k * p.Ld)
    else:
        s = 1.0 if channel is Channel.PLUS else -1.0
        bracket = (
            2.0 - 2.0 * sinc2(two_k * p.Ld)
            - s * 2.0 * sinc2(two_k * p.Dd)
            + s * sinc2(two_k * (p.Dd + p.Ld))
            + s * sinc2(two_k * (p.Dd - p.Ld))
        )
    out = np.where(positive, kernel * bracket, 0.0)
    return float(out) if out.ndim == 0 else out


def gamma_pm_direct(t: float, p: ReservoirParams, tol: float = DEFAULT_TOL,
                    which: Union[Channel, str] = Channel.PLUS, k_max: float = K_MAX) -> float:
    """Gamma_+ or Gamma_- from the full bracket with QUADPACK, independent of the panel rule."""
    if t == 0:
        return 0.0
    return adaptive_quad(lambda k: kernel_integrand(k, t, p, which), k_max, tol, t=t)
