import logging
from dataclasses import dataclass, field
from typing import List

import numpy as np

logger = logging.getLogger(__name__)

DEFAULT_STATE_TOLERANCES = {
    "hermiticity": 1e-12,
    "trace": 1e-12,
    "positivity": 1e-10,
}


@dataclass
class StateReport:
    passed: bool
    hermiticity_defect: float
    trace_defect: float
    min_eigenvalue: float
    reasons: List[str] = field(default_factory=list)


def validate_state(rho, tolerances: dict = None) -> StateReport:
    """Diagnose a candidate 4x4 density matrix; never raises on bad input."""
    tol = {**DEFAULT_STATE_TOLERANCES, **(tolerances or {})}
    matrix = getattr(rho, "rho", rho)
    matrix = np.asarray(matrix, dtype=complex)

    if matrix.shape != (4, 4):
        return StateReport(
            passed=False,
            hermiticity_defect=float("nan"),
            trace_defect=float("nan"),
            min_eigenvalue=float("nan"),
            reasons=[f"shape {matrix.shape} is not (4, 4)"],
        )
    if not np.all(np.isfinite(matrix)):
        return StateReport(False, float("nan"), float("nan"), float("nan"), ["non-finite entries"])

    reasons = []
    herm = float(np.max(np.abs(matrix - matrix.conj().T)))
    trace_defect = float(abs(np.trace(matrix) - 1.0))
    min_eig = float(np.min(np.linalg.eigvalsh(0.5 * (matrix + matrix.conj().T))))

    if herm > tol["hermiticity"]:
        reasons.append(f"Hermiticity defect {herm:.3e}")
    if trace_defect > tol["trace"]:
        reasons.append(f"trace defect {trace_defect:.3e}")
    if min_eig < -tol["positivity"]:
        reasons.append(f"negative eigenvalue {min_eig:.3e}")

    if reasons:
        logger.debug(f"State validation failed: {reasons}")
    return StateReport(
        passed=not reasons,
        hermiticity_defect=herm,
        trace_defect=trace_defect,
        min_eigenvalue=min_eig,
        reasons=reasons,
    )
