"""
Wootters concurrence for two qubits.

The spin-flipped state is rho~ = (sy x sy) rho* (sy x sy). The lambdas are the
square roots of the eigenvalues of rho rho~, obtained here from the Hermitian
PSD matrix sqrt(rho) rho~ sqrt(rho), which has the same spectrum.
"""

import logging
from dataclasses import dataclass

import numpy as np

from core.errors import StateError
from core.validation import validate_state

logger = logging.getLogger(__name__)

SIGMA_Y = np.array([[0, -1j], [1j, 0]])
SY_SY = np.kron(SIGMA_Y, SIGMA_Y)

X_STATE_TOL = 1e-12


@dataclass
class WoottersDiagnostics:
    lambdas: np.ndarray
    trace_rho_rho_tilde: float
    min_lambda_squared: float

    @property
    def sum_of_squares_defect(self) -> float:
        return float(abs(np.sum(self.lambdas ** 2) - self.trace_rho_rho_tilde))


def _checked(rho) -> np.ndarray:
    if hasattr(rho, "rho"):
        return np.asarray(rho.rho, dtype=complex)
    report = validate_state(rho)
    if not report.passed:
        raise StateError(f"invalid density matrix: {'; '.join(report.reasons)}")
    m = np.asarray(rho, dtype=complex)
    return 0.5 * (m + m.conj().T)


def spin_flip(rho) -> np.ndarray:
    m = np.asarray(getattr(rho, "rho", rho), dtype=complex)
    return SY_SY @ m.conj() @ SY_SY


def _psd_sqrt(m: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(m)
    w = np.sqrt(np.clip(w, 0.0, None))
    return (v * w) @ v.conj().T


def wootters_diagnostics(rho) -> WoottersDiagnostics:
    m = _checked(rho)
    tilde = spin_flip(m)
    root = _psd_sqrt(m)
    product = root @ tilde @ root
    eig = np.linalg.eigvalsh(0.5 * (product + product.conj().T))
    lambdas = np.sqrt(np.clip(eig, 0.0, None))[::-1]
    return WoottersDiagnostics(
        lambdas=lambdas,
        trace_rho_rho_tilde=float(np.real(np.trace(m @ tilde))),
        min_lambda_squared=float(eig.min()),
    )


def wootters_lambdas(rho) -> np.ndarray:
    """Decreasing square roots of the eigenvalues of rho rho~."""
    return wootters_diagnostics(rho).lambdas


def concurrence(rho) -> float:
    """Wootters concurrence; X-shaped matrices take the exact closed form."""
    m = _checked(rho)
    if is_x_state(m):
        return concurrence_x_state(m)
    lam = wootters_lambdas(m)
    value = lam[0] - lam[1] - lam[2] - lam[3]
    return float(min(1.0, max(0.0, value)))


def is_x_state(rho, tol: float = X_STATE_TOL) -> bool:
    m = np.asarray(getattr(rho, "rho", rho), dtype=complex)
    mask = np.ones((4, 4), dtype=bool)
    mask[np.arange(4), np.arange(4)] = False
    mask[np.arange(4), np.arange(4)[::-1]] = False
    return bool(np.max(np.abs(m[mask])) <= tol)


def concurrence_x_state(rho) -> float:
    """Closed form for X-shaped density matrices."""
    m = np.asarray(getattr(rho, "rho", rho), dtype=complex)
    p = np.real(np.diag(m))
    value = 2.0 * max(
        0.0,
        abs(m[1, 2]) - np.sqrt(max(p[0] * p[3], 0.0)),
        abs(m[0, 3]) - np.sqrt(max(p[1] * p[2], 0.0)),
    )
    return float(min(1.0, value))


def concurrence_werner(c, gamma):
    """max(0, c e^-gamma - (1 - c)/2); broadcasts over arrays."""
    c_arr = np.asarray(c, dtype=float)
    g_arr = np.asarray(gamma, dtype=float)
    value = np.maximum(0.0, c_arr * np.exp(-g_arr) - (1.0 - c_arr) / 2.0)
    if value.ndim == 0:
        return float(value)
    return value
