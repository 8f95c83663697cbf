"""
Exact pure-dephasing map on the (LL, LR, RL, RR) basis.

Populations are untouched. Coherence (a, b) is multiplied by
exp(-Gamma_ab(t)) exp(i Pi_zz(t) (zz_a - zz_b) / 4), with zz = +1 on LL, RR and
-1 on LR, RL. Local sigma_z phase shifts are left out; they are local unitaries
and leave every reported correlation measure unchanged.

While Gamma_+ and Gamma_- stay nonnegative the map is an average of correlated
random local z-rotations (a random-unitary representation); it is not built
explicitly here.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Tuple, Union

import numpy as np

from core.states import BASIS, BASIS_INDEX, TwoQubitState
from decoherence.profile import DecoherenceProfile, InterpolatedFactors, CSV_FORMAT

logger = logging.getLogger(__name__)

ZZ_EIGENVALUES = np.array([1.0, -1.0, -1.0, 1.0])


@dataclass(frozen=True)
class ElementAssignment:
    """Decay channel and Pi_zz multiplier for every ordered off-diagonal pair."""
    table: Dict[Tuple[str, str], Tuple[str, float]]

    @classmethod
    def standard(cls) -> "ElementAssignment":
        table = {}
        for a in BASIS:
            for b in BASIS:
                if a == b:
                    continue
                flips = sum(x != y for x, y in zip(a, b))
                if flips == 1:
                    factor = "gamma0"
                elif {a, b} == {"LL", "RR"}:
                    factor = "gamma_minus"
                else:
                    factor = "gamma_plus"
                i, j = BASIS_INDEX[a], BASIS_INDEX[b]
                multiplier = (ZZ_EIGENVALUES[i] - ZZ_EIGENVALUES[j]) / 4.0
                table[(a, b)] = (factor, float(multiplier))
        return cls(table)

    def multipliers(self, factors: InterpolatedFactors, include_phase: bool = True) -> np.ndarray:
        out = np.ones((4, 4), dtype=complex)
        values = {"gamma0": factors.gamma0, "gamma_plus": factors.gamma_plus,
                  "gamma_minus": factors.gamma_minus}
        for (a, b), (factor, phase) in self.table.items():
            exponent = -values[factor]
            if include_phase:
                exponent = exponent + 1j * phase * factors.pi_zz
            out[BASIS_INDEX[a], BASIS_INDEX[b]] = np.exp(exponent)
        return out


ASSIGNMENT = ElementAssignment.standard()


def apply_factors(rho0: TwoQubitState, factors: InterpolatedFactors, include_phase: bool = True) -> TwoQubitState:
    return TwoQubitState(rho0.rho * ASSIGNMENT.multipliers(factors, include_phase))


def apply_map(rho0: TwoQubitState, profile: DecoherenceProfile, t: float,
              include_phase: bool = True) -> TwoQubitState:
    if t == 0:
        return rho0
    return apply_factors(rho0, profile.at(t), include_phase)


def evolve_on_grid(rho0: TwoQubitState, profile: DecoherenceProfile,
                   include_phase: bool = True) -> List[TwoQubitState]:
    """Map the initial state to every profile grid point."""
    states = []
    for i, t in enumerate(profile.t_grid):
        factors = InterpolatedFactors(
            t=float(t),
            gamma0=float(profile.gamma0[i]),
            gamma_plus=float(profile.gamma_plus[i]),
            gamma_minus=float(profile.gamma_minus[i]),
            pi_zz=float(profile.pi_zz[i]),
        )
        states.append(apply_factors(rho0, factors, include_phase))
    return states


def two_point_propagator(profile: DecoherenceProfile, t1: float, t2: float) -> Dict[str, float]:
    """
    Coherence amplification factors of the intermediate map from t1 to t2.

    A factor above 1 means the map between t1 and t2 is not a dephasing channel,
    so the dynamics is not divisible there.
    """
    f1, f2 = profile.at(t1), profile.at(t2)
    return {
        "single_flip": float(np.exp(-(f2.gamma0 - f1.gamma0))),
        "LL_RR": float(np.exp(-(f2.gamma_minus - f1.gamma_minus))),
        "LR_RL": float(np.exp(-(f2.gamma_plus - f1.gamma_plus))),
    }


def trajectory_header() -> str:
    columns = ["t"]
    for a in BASIS:
        for b in BASIS:
            columns += [f"re_{a}_{b}", f"im_{a}_{b}"]
    return "# basis order: " + ", ".join(BASIS) + " (row-major)\n" + ",".join(columns)


def write_density_trajectory(path: Union[str, Path], t_grid: Iterable[float],
                             states: Iterable[TwoQubitState]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    rows = []
    for t, state in zip(t_grid, states):
        flat = state.rho.ravel()
        rows.append(np.concatenate([[t], np.column_stack([flat.real, flat.imag]).ravel()]))
    np.savetxt(path, np.array(rows), fmt=CSV_FORMAT, delimiter=",", header=trajectory_header(), comments="")
    logger.info(f"Wrote density-matrix trajectory to {path}")
    return path
