import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.signal import find_peaks

from core.errors import ParameterDomainError
from core.params import ReservoirParams, scale_scattering
from core.states import Sign, basis_state, make_product_plus, make_werner
from correlations.concurrence import concurrence_werner
from correlations.trajectory import CorrelationTrajectory, correlation_trajectory
from decoherence.kernels import DEFAULT_TOL, KernelEvaluator
from decoherence.profile import CSV_FORMAT, build_profile
from dynamics.dephasing_map import evolve_on_grid
from scenarios.classify import DEFAULT_EPS_C, decay_channel, suggest_horizon

logger = logging.getLogger(__name__)

SCAN_VARIABLES = ("a_B", "D")
CROSS_CHECK_LIMIT = 0.02
GENERATION_POINTS = 400


@dataclass
class ScanSeries:
    variable: str
    x: np.ndarray
    value: np.ndarray
    t_max: Optional[np.ndarray] = None
    cross_checks: List[Dict[str, float]] = field(default_factory=list)

    def to_csv(self, path: Union[str, Path], value_name: str = "value") -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        names = ["x", value_name]
        columns = [self.x, self.value]
        if self.t_max is not None:
            names.append("t_max")
            columns.append(self.t_max)
        np.savetxt(path, np.column_stack(columns), fmt=CSV_FORMAT, delimiter=",",
                   header=",".join(names), comments="")
        logger.info(f"Wrote {self.variable} scan ({self.x.size} points) to {path}")
        return path


@dataclass
class GenerationResult:
    c_max: float
    t_max: float
    control_max: Dict[str, float] = field(default_factory=dict)
    with_phases: bool = True


@dataclass
class DiscordComparison:
    gap_times: np.ndarray
    discord_only_times: np.ndarray
    concurrence_peaks: np.ndarray
    discord_peaks: np.ndarray

    def unmatched_peaks(self, tolerance: float) -> np.ndarray:
        """Concurrence peak times with no discord peak within ``tolerance``."""
        if self.discord_peaks.size == 0:
            return self.concurrence_peaks.copy()
        gaps = np.abs(self.concurrence_peaks[:, None] - self.discord_peaks[None, :]).min(axis=1)
        return self.concurrence_peaks[gaps > tolerance]


def scan_point(template: ReservoirParams, variable: str, x: float, a_ref_ratio: float = 1.0) -> ReservoirParams:
    """
    Reservoir for one scan coordinate.

    ``a_B``: x is the scattering length in units of a_Rb.
    ``D``: x is the separation in units of the well half-distance L.
    """
    if variable == "a_B":
        return scale_scattering(template, x / a_ref_ratio)
    if variable == "D":
        if x <= 0:
            raise ParameterDomainError(f"D/L must be > 0, got {x}")
        return template.replace(Dd=x * template.Ld)
    raise ParameterDomainError(f"scan variable must be one of {SCAN_VARIABLES}, got {variable!r}")


def stationary_scan(template: ReservoirParams, variable: str, values: Sequence[float], c: float,
                    sign: Union[Sign, str], a_ref_ratio: float = 1.0, cross_check: int = 3,
                    tol: float = DEFAULT_TOL, cross_talk: bool = True) -> ScanSeries:
    """Stationary Werner concurrence from the time-averaged decay factors."""
    channel = decay_channel(sign)
    x = np.asarray(values, dtype=float)
    if x.size == 0:
        raise ParameterDomainError("scan range must be nonempty")
    residual = np.zeros(x.size)
    evaluators = []
    for i, xi in enumerate(x):
        evaluator = KernelEvaluator(scan_point(template, variable, float(xi), a_ref_ratio), tol, cross_talk=cross_talk)
        residual[i] = concurrence_werner(c, evaluator.stationary().gamma(channel))
        evaluators.append(evaluator)

    checks = []
    for i in sorted(set(np.linspace(0, x.size - 1, min(cross_check, x.size)).round().astype(int))):
        evaluator = evaluators[i]
        horizon = suggest_horizon(evaluator.params)
        at_horizon = concurrence_werner(c, evaluator.evaluate(horizon).gamma(channel))
        deviation = abs(at_horizon - residual[i]) / max(abs(residual[i]), 1e-12) if residual[i] else abs(at_horizon)
        checks.append({"x": float(x[i]), "stationary": float(residual[i]),
                       "horizon": float(at_horizon), "deviation": float(deviation)})
        if deviation > CROSS_CHECK_LIMIT:
            logger.warning(f"Stationary value at x={x[i]:g} disagrees with t={horizon:g} by {deviation:.2%}")

    return ScanSeries(variable, x, residual, cross_checks=checks)


def independent_limit(template: ReservoirParams, c: float, sign: Union[Sign, str],
                      tol: float = DEFAULT_TOL) -> float:
    """Stationary concurrence with the cross-talk term switched off."""
    evaluator = KernelEvaluator(template, tol, cross_talk=False)
    return concurrence_werner(c, evaluator.stationary().gamma(decay_channel(sign)))


def generation_horizon(params: ReservoirParams, tol: float = DEFAULT_TOL) -> float:
    """1.5 times the time for Pi_zz to reach pi at its asymptotic velocity."""
    slope = KernelEvaluator(params, tol).stationary().pi_rate
    if abs(slope) < 1e-12:
        raise ParameterDomainError("Pi_zz does not grow for these parameters; pass an explicit t_grid")
    return 1.5 * math.pi / abs(slope)


def _refine_peak(t: np.ndarray, y: np.ndarray) -> Tuple[float, float]:
    i = int(np.argmax(y))
    if 0 < i < y.size - 1:
        a, b, c0 = np.polyfit(t[i - 1:i + 2], y[i - 1:i + 2], 2)
        if a < 0:
            t_peak = -b / (2.0 * a)
            if t[i - 1] <= t_peak <= t[i + 1]:
                return float(t_peak), float(min(1.0, max(y[i], a * t_peak ** 2 + b * t_peak + c0)))
    return float(t[i]), float(y[i])


def generation_run(params: ReservoirParams, t_grid=None, with_phases: bool = True, tol: float = DEFAULT_TOL,
                   cross_talk: bool = True, n_points: int = GENERATION_POINTS
                   ) -> Tuple[CorrelationTrajectory, GenerationResult]:
    """
    Evolve the product state with both qubits in (|L> + |R>)/sqrt2.

    Only the Pi_zz phase can entangle it; |LL> and |LR> are run as controls.
    """
    if t_grid is None:
        t_grid = np.linspace(0.0, generation_horizon(params, tol), n_points + 1)
    profile = build_profile(params, t_grid, tol=tol, cross_talk=cross_talk)
    trajectory = correlation_trajectory(evolve_on_grid(make_product_plus(), profile, with_phases), profile.t_grid)
    controls = {}
    for label in ("LL", "LR"):
        control = correlation_trajectory(evolve_on_grid(basis_state(label), profile, with_phases), profile.t_grid)
        controls[label] = float(control.concurrence.max())
    t_peak, c_peak = _refine_peak(profile.t_grid, trajectory.concurrence)
    logger.info(f"Generated concurrence peak {c_peak:.4f} at t={t_peak:.4g}")
    return trajectory, GenerationResult(c_peak, t_peak, controls, with_phases)


def generation_scan(template: ReservoirParams, variable: str, values: Sequence[float], a_ref_ratio: float = 1.0,
                    tol: float = DEFAULT_TOL, n_points: int = GENERATION_POINTS) -> ScanSeries:
    """Peak generated concurrence and its time at every scan coordinate."""
    x = np.asarray(values, dtype=float)
    if x.size == 0:
        raise ParameterDomainError("scan range must be nonempty")
    c_max = np.zeros(x.size)
    t_max = np.zeros(x.size)
    for i, xi in enumerate(x):
        _, result = generation_run(scan_point(template, variable, float(xi), a_ref_ratio), tol=tol,
                                   n_points=n_points)
        c_max[i], t_max[i] = result.c_max, result.t_max
    return ScanSeries(variable, x, c_max, t_max=t_max)


def peak_times(t: np.ndarray, values: np.ndarray, prominence: float = 1e-6) -> np.ndarray:
    peaks, _ = find_peaks(np.asarray(values), prominence=prominence)
    return np.asarray(t)[peaks]


def discord_comparison_run(params: ReservoirParams, c: float, sign: Union[Sign, str], t_grid,
                           eps_c: float = DEFAULT_EPS_C, tol: float = DEFAULT_TOL
                           ) -> Tuple[CorrelationTrajectory, DiscordComparison]:
    """Concurrence and discord of an evolving Werner state on one grid."""
    profile = build_profile(params, t_grid, tol=tol)
    states = evolve_on_grid(make_werner(c, sign), profile)
    trajectory = correlation_trajectory(states, profile.t_grid, with_discord=True)
    t = trajectory.t_grid
    gap = trajectory.concurrence <= eps_c
    comparison = DiscordComparison(
        gap_times=t[gap],
        discord_only_times=t[gap & (trajectory.discord > 10.0 * eps_c)],
        concurrence_peaks=peak_times(t, trajectory.concurrence),
        discord_peaks=peak_times(t, trajectory.discord),
    )
    return trajectory, comparison
