import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, Optional, Union

import numpy as np

from core.errors import BecQubitsError, GridRangeError, ParameterDomainError
from core.params import ReservoirParams
from decoherence.kernels import KernelEvaluator, DEFAULT_TOL, K_MAX
from decoherence.rules import check_profile

logger = logging.getLogger(__name__)

PROFILE_COLUMNS = ("t", "gamma0", "delta", "gamma_plus", "gamma_minus", "rate_plus", "rate_minus", "pi_zz")
CSV_FORMAT = "%.15g"

_ARRAY_FIELDS = ("t_grid", "gamma0", "delta", "gamma_plus", "gamma_minus",
                 "rate_plus", "rate_minus", "pi_zz", "pi_rate")


@dataclass(frozen=True)
class InterpolatedFactors:
    t: float
    gamma0: float
    gamma_plus: float
    gamma_minus: float
    pi_zz: float


@dataclass(frozen=True, eq=False)
class DecoherenceProfile:
    params: ReservoirParams
    t_grid: np.ndarray
    gamma0: np.ndarray
    delta: np.ndarray
    gamma_plus: np.ndarray
    gamma_minus: np.ndarray
    rate_plus: np.ndarray
    rate_minus: np.ndarray
    pi_zz: np.ndarray
    pi_rate: np.ndarray
    tol: float
    cross_talk: bool = True
    metadata: Dict = field(default_factory=dict)

    def __post_init__(self):
        for name in _ARRAY_FIELDS:
            arr = np.array(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def t_end(self) -> float:
        return float(self.t_grid[-1])

    def _check_range(self, t: float):
        slack = 1e-12 * max(1.0, self.t_end)
        if t < self.t_grid[0] - slack or t > self.t_end + slack:
            raise GridRangeError(f"t={t:g} outside profile grid [{self.t_grid[0]:g}, {self.t_end:g}]")

    def at(self, t: float) -> InterpolatedFactors:
        """Linear interpolation of the decay factors and the phase."""
        self._check_range(t)
        if self.t_grid.size == 1:
            return InterpolatedFactors(t, 0.0, 0.0, 0.0, 0.0)
        interp = lambda arr: float(np.interp(t, self.t_grid, arr))
        return InterpolatedFactors(
            t=t,
            gamma0=interp(self.gamma0),
            gamma_plus=interp(self.gamma_plus),
            gamma_minus=interp(self.gamma_minus),
            pi_zz=interp(self.pi_zz),
        )

    def interpolant_slopes(self) -> Dict[str, np.ndarray]:
        """Per-interval slopes of the linear interpolants (length len(t_grid) - 1)."""
        dt = np.diff(self.t_grid)
        return {
            "rate_plus": np.diff(self.gamma_plus) / dt,
            "rate_minus": np.diff(self.gamma_minus) / dt,
            "pi_rate": np.diff(self.pi_zz) / dt,
        }

    def as_table(self) -> np.ndarray:
        return np.column_stack([
            self.t_grid, self.gamma0, self.delta, self.gamma_plus, self.gamma_minus,
            self.rate_plus, self.rate_minus, self.pi_zz,
        ])

    def to_csv(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        np.savetxt(path, self.as_table(), fmt=CSV_FORMAT, delimiter=",",
                   header=",".join(PROFILE_COLUMNS), comments="")
        logger.info(f"Wrote decoherence profile ({self.t_grid.size} rows) to {path}")
        return path


def uniform_grid(t_max: float, dt: float) -> np.ndarray:
    if t_max < 0 or dt <= 0:
        raise ParameterDomainError(f"need t_max >= 0 and dt > 0 (t_max={t_max}, dt={dt})")
    n = int(round(t_max / dt))
    return np.linspace(0.0, n * dt, n + 1)


def build_profile(p: ReservoirParams, t_grid, tol: float = DEFAULT_TOL, cross_talk: bool = True,
                  k_max: float = K_MAX, progress: Optional[Callable[[int, int], None]] = None) -> DecoherenceProfile:
    t_grid = np.asarray(t_grid, dtype=float)
    if t_grid.ndim != 1 or t_grid.size == 0:
        raise ParameterDomainError("t_grid must be a nonempty 1D array")
    if t_grid[0] != 0.0:
        raise ParameterDomainError(f"t_grid must start at 0, got {t_grid[0]}")
    if np.any(np.diff(t_grid) <= 0):
        raise ParameterDomainError("t_grid must be strictly ascending")

    evaluator = KernelEvaluator(p, tol, k_max=k_max, cross_talk=cross_talk)
    rows = np.zeros((t_grid.size, 6))
    for i, t in enumerate(t_grid):
        v = evaluator.evaluate(float(t))
        rows[i] = (v.gamma0, v.delta, v.rate0, v.rate_delta, v.pi_zz, v.pi_rate)
        if progress:
            progress(i + 1, t_grid.size)

    g0, d, r0, rd, pi, pi_rate = rows.T
    profile = DecoherenceProfile(
        params=p,
        t_grid=t_grid,
        gamma0=g0,
        delta=d,
        gamma_plus=2.0 * g0 + d,
        gamma_minus=2.0 * g0 - d,
        rate_plus=2.0 * r0 + rd,
        rate_minus=2.0 * r0 - rd,
        pi_zz=pi,
        pi_rate=pi_rate,
        tol=tol,
        cross_talk=cross_talk,
        metadata={"k_max": k_max},
    )

    broken = check_profile(profile, level="invariant")
    if broken:
        raise BecQubitsError(f"profile invariants violated: {', '.join(v['rule'] for v in broken)}")
    for v in check_profile(profile, level="diagnostic"):
        logger.info(f"Profile diagnostic failed: {v['rule']} ({v['description']})")
    logger.debug(f"Built profile with {t_grid.size} points up to t={t_grid[-1]:g}")
    return profile


def extend_profile(profile: DecoherenceProfile, t_new) -> DecoherenceProfile:
    """Profile on the union of the existing grid and ``t_new``; only the new points are evaluated."""
    t_new = np.setdiff1d(np.asarray(t_new, dtype=float), profile.t_grid)
    if t_new.size == 0:
        return profile
    if t_new[0] < 0 or t_new[-1] > profile.t_end:
        raise GridRangeError(f"extension points must lie in [0, {profile.t_end:g}]")

    added = build_profile(profile.params, np.concatenate([[0.0], t_new]), tol=profile.tol,
                          cross_talk=profile.cross_talk, k_max=profile.metadata.get("k_max", K_MAX))
    merged = {name: np.concatenate([getattr(profile, name), getattr(added, name)[1:]]) for name in _ARRAY_FIELDS}
    order = np.argsort(merged["t_grid"], kind="stable")
    logger.debug(f"Extended profile by {t_new.size} points")
    return DecoherenceProfile(
        params=profile.params,
        **{name: values[order] for name, values in merged.items()},
        tol=profile.tol,
        cross_talk=profile.cross_talk,
        metadata=dict(profile.metadata),
    )
