"""
Time-local master equation for the two-qubit dephasing dynamics.

    d rho/dt = rate_plus/8 D[sz_a - sz_b] rho + rate_minus/8 D[sz_a + sz_b] rho
               - i [H_zz, rho],        H_zz = -(pi_rate / 4) sz_a sz_b

with D[A] rho = A rho A - {A^2, rho}/2. The sign of H_zz matches the phase
convention of the exact map, so integrating the equation reproduces
dephasing_map.apply_map including phases.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from scipy.integrate import solve_ivp

from core.errors import GridRangeError, IntegrationError, ParameterDomainError
from core.states import TwoQubitState
from decoherence.kernels import KernelEvaluator, K_MAX
from decoherence.profile import DecoherenceProfile

logger = logging.getLogger(__name__)

SIGMA_Z = np.diag([1.0, -1.0]).astype(complex)
IDENTITY_2 = np.eye(2, dtype=complex)
SZ_A = np.kron(SIGMA_Z, IDENTITY_2)
SZ_B = np.kron(IDENTITY_2, SIGMA_Z)
SZ_SZ = SZ_A @ SZ_B

DEFAULT_INTEGRATOR = {
    "method": "RK45",
    "rtol": 1e-10,
    "atol": 1e-12,
}


@dataclass
class MasterEquationTrajectory:
    t: np.ndarray
    states: List[TwoQubitState]
    nfev: int
    include_phase: bool

    @property
    def final(self) -> TwoQubitState:
        return self.states[-1]


def dissipator(a: np.ndarray, rho: np.ndarray) -> np.ndarray:
    a2 = a @ a
    return a @ rho @ a.conj().T - 0.5 * (a2 @ rho + rho @ a2)


def me_rhs(rho, rate_plus: float, rate_minus: float, pi_rate: float = 0.0) -> np.ndarray:
    rho = np.asarray(getattr(rho, "rho", rho), dtype=complex)
    h_zz = -(pi_rate / 4.0) * SZ_SZ
    return (
        rate_plus / 8.0 * dissipator(SZ_A - SZ_B, rho)
        + rate_minus / 8.0 * dissipator(SZ_A + SZ_B, rho)
        - 1j * (h_zz @ rho - rho @ h_zz)
    )


def _as_state(y: np.ndarray) -> TwoQubitState:
    m = y.reshape(4, 4)
    return TwoQubitState(0.5 * (m + m.conj().T))


def _solve(fun, t0: float, t1: float, y0: np.ndarray, options: dict, t_eval=None):
    result = solve_ivp(fun, (t0, t1), y0, t_eval=t_eval, **options)
    if not result.success:
        raise IntegrationError(
            f"master-equation integration failed: {result.message}",
            t=float(result.t[-1]) if result.t.size else t0,
            diagnostics={"status": result.status, "nfev": result.nfev, "interval": (t0, t1)},
        )
    return result


def integrate_me(rho0: TwoQubitState, profile: DecoherenceProfile, t_end: float,
                 include_phase: bool = True, rates: str = "interpolant",
                 step_control: Optional[dict] = None) -> MasterEquationTrajectory:
    """
    Integrate the master equation from 0 to t_end.

    ``rates="interpolant"`` drives the equation with the slopes of the same
    piecewise-linear interpolants apply_map uses, integrating one grid interval
    at a time. ``rates="quadrature"`` evaluates the kernel rates afresh at every
    solver step and integrates in one sweep; at grid points it reproduces the
    map only through the quadrature itself. The trajectory is reported on the
    profile grid points up to t_end plus t_end itself.
    """
    if t_end < 0 or t_end > profile.t_end + 1e-12 * max(1.0, profile.t_end):
        raise GridRangeError(f"t_end={t_end:g} outside profile grid [0, {profile.t_end:g}]")
    if rates not in ("interpolant", "quadrature"):
        raise ParameterDomainError(f"rates must be 'interpolant' or 'quadrature', got {rates!r}")
    options = {**DEFAULT_INTEGRATOR, **(step_control or {})}
    phase_on = 1.0 if include_phase else 0.0

    grid = profile.t_grid
    report_t = np.append(grid[grid < t_end], t_end) if t_end > 0 else np.array([0.0])
    y = np.asarray(rho0.rho, dtype=complex).ravel()
    states = [rho0]
    nfev = 0

    if t_end == 0:
        return MasterEquationTrajectory(report_t, states, 0, include_phase)

    if rates == "interpolant":
        slopes = profile.interpolant_slopes()
        for i in range(report_t.size - 1):
            t0, t1 = float(report_t[i]), float(report_t[i + 1])
            idx = min(int(np.searchsorted(grid, t0, side="right")) - 1, grid.size - 2)
            r_plus, r_minus = slopes["rate_plus"][idx], slopes["rate_minus"][idx]
            r_pi = phase_on * slopes["pi_rate"][idx]

            def rhs(_t, yv, rp=r_plus, rm=r_minus, rpi=r_pi):
                return me_rhs(yv.reshape(4, 4), rp, rm, rpi).ravel()

            result = _solve(rhs, t0, t1, y, options)
            nfev += result.nfev
            y = result.y[:, -1]
            states.append(_as_state(y))
    else:
        evaluator = KernelEvaluator(profile.params, profile.tol, k_max=profile.metadata.get("k_max", K_MAX),
                                    cross_talk=profile.cross_talk)

        def rhs(t, yv):
            v = evaluator.evaluate(min(max(t, 0.0), profile.t_end))
            return me_rhs(yv.reshape(4, 4), v.rate_plus, v.rate_minus, phase_on * v.pi_rate).ravel()

        result = _solve(rhs, 0.0, float(t_end), y, options, t_eval=report_t)
        nfev = result.nfev
        states += [_as_state(result.y[:, j]) for j in range(1, result.y.shape[1])]

    logger.debug(f"Integrated master equation to t={t_end:g} with {nfev} rhs evaluations")
    return MasterEquationTrajectory(report_t, states, nfev, include_phase)
