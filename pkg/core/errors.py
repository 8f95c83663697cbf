from typing import Optional

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_CONFIG = 3
EXIT_QUADRATURE = 4
EXIT_INCONCLUSIVE = 5
EXIT_VALIDATION = 6
EXIT_INTEGRATION = 7
EXIT_INTERRUPTED = 130


class BecQubitsError(Exception):
    """Base class for every error raised by the simulator."""
    exit_code = EXIT_ERROR


class ConfigError(BecQubitsError):
    exit_code = EXIT_CONFIG


class ParameterDomainError(BecQubitsError, ValueError):
    exit_code = EXIT_CONFIG


class StateError(BecQubitsError, ValueError):
    """Matrix is not a valid two-qubit density matrix."""
    exit_code = EXIT_ERROR


class GridRangeError(BecQubitsError, ValueError):
    exit_code = EXIT_ERROR


class NotBellDiagonalError(BecQubitsError, ValueError):
    exit_code = EXIT_ERROR


class QuadratureError(BecQubitsError, ArithmeticError):
    exit_code = EXIT_QUADRATURE

    def __init__(self, message: str, t: Optional[float] = None, achieved_error: Optional[float] = None):
        super().__init__(message)
        self.t = t
        self.achieved_error = achieved_error

    def __str__(self):
        parts = [super().__str__()]
        if self.t is not None:
            parts.append(f"t={self.t:g}")
        if self.achieved_error is not None:
            parts.append(f"achieved error={self.achieved_error:.3e}")
        return " | ".join(parts)


class IntegrationError(BecQubitsError):
    exit_code = EXIT_INTEGRATION

    def __init__(self, message: str, t: Optional[float] = None, diagnostics: Optional[dict] = None):
        super().__init__(message)
        self.t = t
        self.diagnostics = diagnostics or {}


class InconclusiveError(BecQubitsError):
    exit_code = EXIT_INCONCLUSIVE


class ValidationFailure(BecQubitsError):
    exit_code = EXIT_VALIDATION
