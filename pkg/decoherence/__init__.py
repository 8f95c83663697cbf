from .kernels import (
    Channel,
    KernelEvaluator,
    KernelValues,
    gamma0,
    delta,
    gamma_pm,
    gamma_pm_direct,
    gamma_rate,
    gamma_infinity,
    pi_zz,
    pi_zz_slope,
    kernel_integrand,
    DEFAULT_TOL,
    K_MAX,
)
from .oracle import OracleEstimate, discrete_bath_oracle
from .profile import DecoherenceProfile, build_profile, uniform_grid, PROFILE_COLUMNS

__all__ = [
    'Channel', 'KernelEvaluator', 'KernelValues',
    'gamma0', 'delta', 'gamma_pm', 'gamma_pm_direct', 'gamma_rate',
    'gamma_infinity', 'pi_zz', 'pi_zz_slope', 'kernel_integrand',
    'OracleEstimate', 'discrete_bath_oracle',
    'DecoherenceProfile', 'build_profile', 'uniform_grid', 'PROFILE_COLUMNS',
]

__version__ = "0.1.0"

# Default quadrature configuration
DEFAULT_QUADRATURE = {
    "tol": DEFAULT_TOL,
    "k_max": K_MAX,
    "max_levels": 6,
    "gauss_order": 8,
    "smooth_width": 1.0,
    "periods_per_panel": 1.0,
}
