import logging

import numpy as np
from scipy.special import xlogy

logger = logging.getLogger(__name__)

EIGENVALUE_FLOOR = 1e-15


def _matrix(rho) -> np.ndarray:
    return np.asarray(getattr(rho, "rho", rho), dtype=complex)


def partial_trace(rho, keep: str) -> np.ndarray:
    """Reduced 2x2 state of qubit ``keep`` ('a' or 'b')."""
    t = _matrix(rho).reshape(2, 2, 2, 2)
    if keep == "a":
        return np.einsum("ijkj->ik", t)
    if keep == "b":
        return np.einsum("ijik->jk", t)
    raise ValueError(f"keep must be 'a' or 'b', got {keep!r}")


def shannon_bits(p: np.ndarray) -> float:
    p = np.clip(np.asarray(p, dtype=float), 0.0, None)
    return float(-np.sum(xlogy(p, p)) / np.log(2.0))


def von_neumann_entropy(rho) -> float:
    """Entropy in bits; 0 log 0 is taken as 0."""
    m = _matrix(rho)
    eigenvalues = np.linalg.eigvalsh(0.5 * (m + m.conj().T))
    eigenvalues[eigenvalues < EIGENVALUE_FLOOR] = 0.0
    return shannon_bits(eigenvalues)


def mutual_information(rho) -> float:
    value = (von_neumann_entropy(partial_trace(rho, "a"))
             + von_neumann_entropy(partial_trace(rho, "b"))
             - von_neumann_entropy(rho))
    return max(0.0, value)
