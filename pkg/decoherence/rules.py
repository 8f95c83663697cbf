import numpy as np
from typing import Dict, List

# ==========================
# Profile Rule Definitions
# ==========================

PM_IDENTITY_TOL = 1e-9
CP_TOL = 1e-9

PROFILE_RULES = [
    # -------------------
    # Invariants (a violation is a bug)
    # -------------------
    {
        "name": "Finite Values",
        "level": "invariant",
        "check": lambda p: all(np.all(np.isfinite(a)) for a in (
            p.gamma0, p.delta, p.gamma_plus, p.gamma_minus, p.rate_plus, p.rate_minus, p.pi_zz)),
        "description": "Every tabulated factor, rate and phase is finite.",
    },
    {
        "name": "Grid Starts At Zero",
        "level": "invariant",
        "check": lambda p: p.t_grid.size > 0 and p.t_grid[0] == 0.0,
        "description": "The time grid starts at t = 0.",
    },
    {
        "name": "Ascending Grid",
        "level": "invariant",
        "check": lambda p: bool(np.all(np.diff(p.t_grid) > 0)),
        "description": "The time grid is strictly increasing.",
    },
    {
        "name": "Zero Initial Decay",
        "level": "invariant",
        "check": lambda p: p.gamma0[0] == 0.0 and p.pi_zz[0] == 0.0,
        "description": "Gamma_0 and Pi_zz vanish at t = 0.",
    },
    {
        "name": "Plus Identity",
        "level": "invariant",
        "check": lambda p: _close(p.gamma_plus, 2.0 * p.gamma0 + p.delta),
        "description": "Gamma_+ = 2 Gamma_0 + delta pointwise.",
    },
    {
        "name": "Minus Identity",
        "level": "invariant",
        "check": lambda p: _close(p.gamma_minus, 2.0 * p.gamma0 - p.delta),
        "description": "Gamma_- = 2 Gamma_0 - delta pointwise.",
    },
    # -------------------
    # Physics diagnostics (reported, not enforced)
    # -------------------
    {
        "name": "Complete Positivity",
        "level": "diagnostic",
        "check": lambda p: bool(np.all(p.gamma_plus >= -CP_TOL) and np.all(p.gamma_minus >= -CP_TOL)),
        "description": "Gamma_+ and Gamma_- are nonnegative, so the map is completely positive.",
    },
    {
        "name": "Nonnegative Single-Qubit Decay",
        "level": "diagnostic",
        "check": lambda p: bool(np.all(p.gamma0 >= -CP_TOL)),
        "description": "Gamma_0 has a nonnegative integrand.",
    },
]


def _close(a: np.ndarray, b: np.ndarray) -> bool:
    scale = np.maximum(1.0, np.abs(b))
    return bool(np.all(np.abs(a - b) <= PM_IDENTITY_TOL * scale))


def check_profile(profile, level: str = None) -> List[Dict[str, str]]:
    """Return the rules the profile violates, optionally restricted to one level."""
    violations = []
    for rule in PROFILE_RULES:
        if level and rule["level"] != level:
            continue
        if not rule["check"](profile):
            violations.append({
                "rule": rule["name"],
                "level": rule["level"],
                "description": rule["description"],
            })
    return violations


def is_consistent(profile) -> bool:
    return not check_profile(profile, level="invariant")
