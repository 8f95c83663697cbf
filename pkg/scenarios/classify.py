"""
Classification of Werner-state entanglement dynamics.

A Werner state with sign '+' keeps its Bell coherence on (LL, RR) and decays
with Gamma_-; sign '-' decays with Gamma_+. Its concurrence is the closed form
max(0, c e^-Gamma - (1 - c)/2), evaluated on a profile grid.
"""

import logging
import math
from dataclasses import dataclass, asdict
from enum import Enum
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.optimize import brentq

from core.errors import InconclusiveError, ParameterDomainError
from core.params import ReservoirParams
from core.states import Sign
from correlations.concurrence import concurrence_werner
from decoherence.kernels import Channel, DEFAULT_TOL
from decoherence.profile import DecoherenceProfile, build_profile, extend_profile

logger = logging.getLogger(__name__)

SEPARABLE_BOUND = 1.0 / 3.0
DEFAULT_EPS_C = 1e-6
DRIFT_LIMIT = 0.01
DRIFT_WINDOW = 0.1
TAIL_REFINEMENT = 20


class DynamicsLabel(Enum):
    SUDDEN_DEATH = "SUDDEN_DEATH"
    REVIVALS = "REVIVALS"
    TRAPPING = "TRAPPING"
    INCONCLUSIVE = "INCONCLUSIVE"


# Along increasing c at fixed reservoir the label can only move forward
LABEL_RANK = {
    DynamicsLabel.SUDDEN_DEATH: 0,
    DynamicsLabel.REVIVALS: 1,
    DynamicsLabel.TRAPPING: 2,
}


@dataclass
class DynamicsClass:
    label: DynamicsLabel
    residual: float
    death_time: Optional[float]
    revival_count: int
    converged: bool = True
    drift: float = 0.0

    def as_dict(self) -> dict:
        data = asdict(self)
        data["label"] = self.label.value
        return data


def decay_channel(sign: Union[Sign, str]) -> Channel:
    return Channel.MINUS if Sign.parse(sign) is Sign.PLUS else Channel.PLUS


def suggest_horizon(p: ReservoirParams) -> float:
    """Three round trips of sound across the qubit pair, and at least 40 time units."""
    c_s = math.sqrt(p.u)
    return max(40.0, 3.0 * 2.0 * (p.Dd + p.Ld) / c_s, 40.0 / c_s)


def transient_end(p: ReservoirParams, horizon: float) -> float:
    """End of the dense part of the classification grid."""
    return min(horizon, max(10.0, 3.0 * (p.Dd + p.Ld) / math.sqrt(p.u)))


def classification_grid(p: ReservoirParams, horizon: float, n_dense: int = 600, n_coarse: int = 100) -> np.ndarray:
    """Dense grid over the transient, coarse grid over the approach to the stationary value."""
    if horizon <= 0:
        raise ParameterDomainError(f"horizon must be > 0, got {horizon}")
    t_split = transient_end(p, horizon)
    dense = np.linspace(0.0, t_split, n_dense + 1)
    if t_split >= horizon:
        return dense
    coarse = np.linspace(t_split, horizon, n_coarse + 1)[1:]
    return np.concatenate([dense, coarse])


def _decay_factor(profile: DecoherenceProfile, channel: Channel) -> np.ndarray:
    return profile.gamma_plus if channel is Channel.PLUS else profile.gamma_minus


def tail_crossings(profile: DecoherenceProfile, c_values: Sequence[float], sign: Union[Sign, str],
                   t_split: float, eps_c: float = DEFAULT_EPS_C) -> List[Tuple[float, float]]:
    """Grid intervals past ``t_split`` across which any of the Werner concurrences crosses eps_c."""
    gamma = _decay_factor(profile, decay_channel(sign))
    t = profile.t_grid
    starts = set()
    for c in c_values:
        if c <= SEPARABLE_BOUND:
            continue
        alive = concurrence_werner(float(c), gamma) > eps_c
        flips = np.flatnonzero(alive[1:] != alive[:-1])
        starts.update(int(i) for i in flips if t[i] >= t_split)
    return [(float(t[i]), float(t[i + 1])) for i in sorted(starts)]


def refine_tail(profile: DecoherenceProfile, c_values: Sequence[float], sign: Union[Sign, str],
                t_split: float, eps_c: float = DEFAULT_EPS_C, n_refine: int = TAIL_REFINEMENT) -> DecoherenceProfile:
    """
    Subdivide every coarse-tail interval that holds a concurrence crossing
    into ``n_refine`` steps, so short late revivals next to it are resolved.
    """
    intervals = tail_crossings(profile, c_values, sign, t_split, eps_c)
    if not intervals:
        return profile
    extra = np.concatenate([np.linspace(a, b, n_refine + 1)[1:-1] for a, b in intervals])
    logger.debug(f"Refining {len(intervals)} tail intervals with {extra.size} extra points")
    return extend_profile(profile, extra)


def horizon_drift(profile: DecoherenceProfile, which: Union[Channel, str] = Channel.SINGLE,
                  window: float = DRIFT_WINDOW) -> float:
    """Relative spread of Gamma over the final ``window`` fraction of the grid."""
    channel = Channel.parse(which)
    gamma = {Channel.SINGLE: profile.gamma0, Channel.PLUS: profile.gamma_plus,
             Channel.MINUS: profile.gamma_minus}[channel]
    t = profile.t_grid
    tail = gamma[t >= t[-1] * (1.0 - window)]
    scale = max(abs(float(gamma[-1])), 1e-12)
    return float((tail.max() - tail.min()) / scale)


def _crossing(profile: DecoherenceProfile, channel: Channel, c: float, eps_c: float, a: float, b: float) -> float:
    def f(t):
        return concurrence_werner(c, profile.at(t).gamma_plus if channel is Channel.PLUS
                                  else profile.at(t).gamma_minus) - eps_c
    fa, fb = f(a), f(b)
    if fa * fb > 0:
        return b
    return float(brentq(f, a, b, xtol=1e-10))


def classify_profile(profile: DecoherenceProfile, c: float, sign: Union[Sign, str],
                     eps_c: float = DEFAULT_EPS_C, drift_limit: float = DRIFT_LIMIT) -> DynamicsClass:
    if not 0.0 <= c <= 1.0:
        raise ParameterDomainError(f"c must lie in [0, 1], got {c}")
    channel = decay_channel(sign)

    if c <= SEPARABLE_BOUND:
        return DynamicsClass(DynamicsLabel.SUDDEN_DEATH, 0.0, 0.0, 0)

    drift = horizon_drift(profile, channel)
    gamma = _decay_factor(profile, channel)
    conc = concurrence_werner(c, gamma)
    residual = float(conc[-1])
    if drift > drift_limit:
        logger.warning(f"Horizon t={profile.t_end:g} not converged (drift {drift:.2%}); classification inconclusive")
        return DynamicsClass(DynamicsLabel.INCONCLUSIVE, residual, None, 0, converged=False, drift=drift)

    alive = conc > eps_c
    t = profile.t_grid
    death_time = None
    revivals = 0
    for i in range(1, t.size):
        if alive[i - 1] and not alive[i]:
            if death_time is None:
                death_time = _crossing(profile, channel, c, eps_c, float(t[i - 1]), float(t[i]))
        elif not alive[i - 1] and alive[i] and death_time is not None:
            revivals += 1

    if revivals:
        label = DynamicsLabel.REVIVALS
    elif residual > eps_c:
        label = DynamicsLabel.TRAPPING
    else:
        label = DynamicsLabel.SUDDEN_DEATH
    return DynamicsClass(label, residual, death_time, revivals, converged=True, drift=drift)


def classify(params: ReservoirParams, c: float, sign: Union[Sign, str], horizon: Optional[float] = None,
             eps_c: float = DEFAULT_EPS_C, tol: float = DEFAULT_TOL, cross_talk: bool = True,
             strict: bool = False) -> DynamicsClass:
    """
    Classify the concurrence dynamics of a Werner state.

    With ``strict=True`` a non-converged horizon raises InconclusiveError
    instead of returning the INCONCLUSIVE label.
    """
    horizon = horizon or suggest_horizon(params)
    profile = build_profile(params, classification_grid(params, horizon), tol=tol, cross_talk=cross_talk)
    profile = refine_tail(profile, [c], sign, transient_end(params, horizon), eps_c)
    result = classify_profile(profile, c, sign, eps_c)
    if strict and not result.converged:
        raise InconclusiveError(
            f"Gamma drift {result.drift:.2%} over the final {DRIFT_WINDOW:.0%} of horizon {horizon:g}"
        )
    return result
