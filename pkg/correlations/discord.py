"""
Quantum discord Q = I(rho) - J(rho) with projective measurements on qubit b.

J(rho) = S(rho_a) - min over measurements of sum_k p_k S(rho_a|k). For
Bell-diagonal states the minimum is reached along the axis of the largest
|c_i| and the closed form below applies; everything else goes through the
Bloch-sphere grid search with local refinement.
"""

import logging
from typing import Tuple

import numpy as np
from scipy.optimize import minimize

from core.errors import NotBellDiagonalError
from correlations.entropy import _matrix, mutual_information, partial_trace, shannon_bits, von_neumann_entropy

logger = logging.getLogger(__name__)

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
PAULI_PAIRS = tuple(np.kron(s, s) for s in PAULI)

BELL_DIAGONAL_TOL = 1e-9
DEFAULT_GRID = {"n_theta": 100, "n_phi": 200}


def bell_correlations(rho) -> np.ndarray:
    """c_i = Tr[rho (sigma_i x sigma_i)] for i = x, y, z."""
    m = _matrix(rho)
    return np.array([np.real(np.trace(m @ s)) for s in PAULI_PAIRS])


def is_bell_diagonal(rho, tol: float = BELL_DIAGONAL_TOL) -> bool:
    m = _matrix(rho)
    c = bell_correlations(m)
    rebuilt = 0.25 * (np.eye(4) + sum(ci * s for ci, s in zip(c, PAULI_PAIRS)))
    return bool(np.max(np.abs(m - rebuilt)) <= tol)


def _binary_entropy_pm(c: float) -> float:
    """Entropy in bits of the pair ((1 - c)/2, (1 + c)/2)."""
    return shannon_bits(np.array([(1.0 - c) / 2.0, (1.0 + c) / 2.0]))


def discord_bell_diagonal(rho, tol: float = BELL_DIAGONAL_TOL) -> float:
    if not is_bell_diagonal(rho, tol):
        raise NotBellDiagonalError(
            "state is not Bell-diagonal; use discord_bruteforce for general states"
        )
    c = float(np.max(np.abs(bell_correlations(rho))))
    classical = 1.0 - _binary_entropy_pm(min(c, 1.0))
    return max(0.0, mutual_information(rho) - classical)


def _projectors(theta: np.ndarray, phi: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    n = np.stack([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)], axis=-1)
    n_sigma = np.einsum("gi,ijk->gjk", n, np.stack(PAULI))
    eye = np.eye(2, dtype=complex)
    return 0.5 * (eye + n_sigma), 0.5 * (eye - n_sigma)


def _conditional_entropy(t: np.ndarray, theta: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """Average entropy of qubit a after measuring qubit b along each (theta, phi)."""
    total = np.zeros(theta.shape[0])
    for proj in _projectors(theta, phi):
        unnormalized = np.einsum("gbe,aecb->gac", proj, t)
        p = np.real(np.einsum("gaa->g", unnormalized))
        eig = np.linalg.eigvalsh(0.5 * (unnormalized + np.conj(np.swapaxes(unnormalized, 1, 2))))
        eig = np.clip(eig, 0.0, None)
        with np.errstate(divide="ignore", invalid="ignore"):
            q = np.where(p[:, None] > 1e-15, eig / p[:, None], 0.0)
            h = -np.sum(np.where(q > 0, q * np.log2(np.where(q > 0, q, 1.0)), 0.0), axis=1)
        total += p * h
    return total


def discord_bruteforce(rho, n_theta: int = DEFAULT_GRID["n_theta"], n_phi: int = DEFAULT_GRID["n_phi"],
                       refine: bool = True) -> float:
    m = _matrix(rho)
    t = m.reshape(2, 2, 2, 2)
    theta_axis = np.linspace(0.0, np.pi, n_theta)
    phi_axis = np.linspace(0.0, 2.0 * np.pi, n_phi, endpoint=False)
    theta, phi = (a.ravel() for a in np.meshgrid(theta_axis, phi_axis, indexing="ij"))
    cond = _conditional_entropy(t, theta, phi)
    best = int(np.argmin(cond))
    best_value = float(cond[best])

    if refine:
        def objective(x):
            return float(_conditional_entropy(t, np.array([x[0]]), np.array([x[1]]))[0])

        result = minimize(objective, x0=[theta[best], phi[best]], method="Nelder-Mead",
                          options={"xatol": 1e-10, "fatol": 1e-13, "maxiter": 2000})
        best_value = min(best_value, float(result.fun))

    classical = von_neumann_entropy(partial_trace(m, "a")) - best_value
    value = mutual_information(m) - classical
    logger.debug(f"Brute-force discord {value:.3e} from {theta.size} grid points")
    return max(0.0, value)


def discord(rho, method: str = "auto", **grid) -> float:
    """Closed form for Bell-diagonal states, brute force otherwise."""
    if method == "closed" or (method == "auto" and is_bell_diagonal(rho)):
        return discord_bell_diagonal(rho)
    if method not in ("auto", "bruteforce"):
        raise ValueError(f"unknown discord method {method!r}")
    return discord_bruteforce(rho, **grid)
