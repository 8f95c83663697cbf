"""
Two-qubit density matrices in the positional basis (LL, LR, RL, RR).

|L> plays the role of the computational |0> and |R> of |1>, so sigma_z = diag(1, -1)
on each qubit and the basis order coincides with (00, 01, 10, 11).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np

from core.errors import ParameterDomainError, StateError

logger = logging.getLogger(__name__)

BASIS = ("LL", "LR", "RL", "RR")
BASIS_INDEX = {label: i for i, label in enumerate(BASIS)}

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
POSITIVITY_TOL = 1e-10

# Standard square root of SWAP; SQRT_SWAP @ SQRT_SWAP == SWAP
SQRT_SWAP = np.array([
    [1, 0, 0, 0],
    [0, (1 + 1j) / 2, (1 - 1j) / 2, 0],
    [0, (1 - 1j) / 2, (1 + 1j) / 2, 0],
    [0, 0, 0, 1],
], dtype=complex)

# Real rotation in the {01, 10} block as printed for the preparation protocol.
# It maps |10> to a maximally entangled state but does not square to SWAP.
SQRT_SWAP_AS_PRINTED = np.array([
    [1, 0, 0, 0],
    [0, 1 / np.sqrt(2), 1 / np.sqrt(2), 0],
    [0, -1 / np.sqrt(2), 1 / np.sqrt(2), 0],
    [0, 0, 0, 1],
], dtype=complex)

SWAP = np.array([
    [1, 0, 0, 0],
    [0, 0, 1, 0],
    [0, 1, 0, 0],
    [0, 0, 0, 1],
], dtype=complex)

PROTOCOL_GATES = {
    "standard": SQRT_SWAP,
    "printed": SQRT_SWAP_AS_PRINTED,
}


class Sign(str, Enum):
    PLUS = "+"
    MINUS = "-"

    @classmethod
    def parse(cls, value: Union["Sign", str, int]) -> "Sign":
        if isinstance(value, Sign):
            return value
        if value in ("+", "plus", 1, "+1"):
            return cls.PLUS
        if value in ("-", "minus", -1, "-1"):
            return cls.MINUS
        raise ParameterDomainError(f"sign must be '+' or '-', got {value!r}")


@dataclass(frozen=True, eq=False)
class TwoQubitState:
    rho: np.ndarray

    def __post_init__(self):
        rho = np.array(self.rho, dtype=complex)
        if rho.shape != (4, 4):
            raise StateError(f"density matrix must be 4x4, got shape {rho.shape}")
        from core.validation import validate_state
        report = validate_state(rho)
        if not report.passed:
            raise StateError(f"invalid density matrix: {'; '.join(report.reasons)}")
        rho.setflags(write=False)
        object.__setattr__(self, "rho", rho)

    def element(self, row: str, col: str) -> complex:
        return complex(self.rho[BASIS_INDEX[row], BASIS_INDEX[col]])

    @property
    def populations(self) -> np.ndarray:
        return np.real(np.diag(self.rho)).copy()

    @property
    def purity(self) -> float:
        return float(np.real(np.trace(self.rho @ self.rho)))

    def __eq__(self, other):
        if not isinstance(other, TwoQubitState):
            return NotImplemented
        return np.array_equal(self.rho, other.rho)

    __hash__ = None


def _check_mixing(c: float) -> float:
    c = float(c)
    if not 0.0 <= c <= 1.0:
        raise ParameterDomainError(f"mixing parameter c must lie in [0, 1], got {c}")
    return c


def _projector(vector: np.ndarray) -> np.ndarray:
    return np.outer(vector, vector.conj())


def bell_vector(sign: Union[Sign, str]) -> np.ndarray:
    """|Phi+> = (|LL> + |RR>)/sqrt2 for '+', |Psi+> = (|LR> + |RL>)/sqrt2 for '-'."""
    sign = Sign.parse(sign)
    vec = np.zeros(4, dtype=complex)
    if sign is Sign.PLUS:
        vec[[0, 3]] = 1 / np.sqrt(2)
    else:
        vec[[1, 2]] = 1 / np.sqrt(2)
    return vec


def make_werner(c: float, sign: Union[Sign, str]) -> TwoQubitState:
    c = _check_mixing(c)
    rho = c * _projector(bell_vector(sign)) + (1 - c) / 4 * np.eye(4)
    return TwoQubitState(rho)


def make_product_plus() -> TwoQubitState:
    """(|L> + |R>)/sqrt2 on both qubits; every entry equals 1/4."""
    return TwoQubitState(np.full((4, 4), 0.25, dtype=complex))


def basis_state(label: str) -> TwoQubitState:
    label = label.upper()
    if label not in BASIS_INDEX:
        raise ParameterDomainError(f"unknown basis label {label!r}; expected one of {', '.join(BASIS)}")
    vec = np.zeros(4, dtype=complex)
    vec[BASIS_INDEX[label]] = 1.0
    return TwoQubitState(_projector(vec))


def prepare_werner_via_protocol(c: float, sign: Union[Sign, str], gate: str = "standard") -> TwoQubitState:
    """
    Simulate the three-step preparation of a Werner-type state.

    (i) mix c|10><10| (|01> for sign '-') with the maximally mixed state,
    (ii) apply a square-root-of-SWAP gate,
    (iii) identify |0> with |L> and |1> with |R>.

    The result equals make_werner(c, sign) up to a local unitary.
    """
    c = _check_mixing(c)
    sign = Sign.parse(sign)
    if gate not in PROTOCOL_GATES:
        raise ParameterDomainError(f"unknown gate {gate!r}; expected one of {sorted(PROTOCOL_GATES)}")
    u = PROTOCOL_GATES[gate]

    excited = np.zeros(4, dtype=complex)
    excited[2 if sign is Sign.PLUS else 1] = 1.0
    rho = c * _projector(excited) + (1 - c) / 4 * np.eye(4)
    rho = u @ rho @ u.conj().T
    # step (iii): index order (00, 01, 10, 11) is already (LL, LR, RL, RR)
    rho = 0.5 * (rho + rho.conj().T)
    return TwoQubitState(rho)


def parse_state_spec(spec: str) -> TwoQubitState:
    """
    Build a state from the CLI mini-grammar.

    ``werner:{+|-}:{c}``, ``product+`` or ``basis:{LL|LR|RL|RR}``.
    """
    text = spec.strip()
    if text == "product+":
        return make_product_plus()
    parts = text.split(":")
    if parts[0] == "werner" and len(parts) == 3:
        try:
            c = float(parts[2])
        except ValueError:
            raise ParameterDomainError(f"invalid Werner mixing parameter in {spec!r}")
        return make_werner(c, parts[1])
    if parts[0] == "basis" and len(parts) == 2:
        return basis_state(parts[1])
    raise ParameterDomainError(
        f"invalid state specifier {spec!r}; use werner:{{+|-}}:{{c}}, product+ or basis:{{LL|LR|RL|RR}}"
    )
