"""
Panel Gauss-Legendre quadrature on k in (0, k_max].

Panel edges follow a monotone "phase count"

    s(k) = k / h_k + t E(k) / (2 pi P)

so every panel spans at most h_k in k (resolving the Gaussian envelope and the
sinc oscillations of the geometric factors) and at most P oscillation periods
of cos(E t). Refinement halves all panels until two successive levels agree.
"""

import math
import logging
import warnings
from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np
from scipy import integrate

from bogoliubov.spectrum import dispersion
from core.errors import QuadratureError
from core.params import ReservoirParams

logger = logging.getLogger(__name__)

GAUSS_ORDER = 8
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(GAUSS_ORDER)
_TABLE_SIZE = 4097


@dataclass(frozen=True)
class QuadratureResult:
    values: np.ndarray
    errors: np.ndarray
    level: int
    n_nodes: int


def panel_edges(t: float, params: ReservoirParams, k_max: float, level: int = 0,
                smooth_width: float = 1.0, periods_per_panel: float = 1.0) -> np.ndarray:
    h_k = min(smooth_width, math.pi / (params.Dd + params.Ld))
    table_k = np.linspace(0.0, k_max, _TABLE_SIZE)
    energy = dispersion(table_k, params.u).E
    phase_count = table_k / h_k + t * energy / (2.0 * math.pi * periods_per_panel)
    n_panels = max(1, math.ceil(phase_count[-1])) * 2 ** level
    targets = np.linspace(0.0, phase_count[-1], n_panels + 1)
    edges = np.interp(targets, phase_count, table_k)
    edges[0], edges[-1] = 0.0, k_max
    return edges


def gauss_nodes(edges: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    nodes = (mid[:, None] + half[:, None] * _GL_NODES[None, :]).ravel()
    weights = (half[:, None] * _GL_WEIGHTS[None, :]).ravel()
    return nodes, weights


def panel_quadrature(integrands: Callable[[np.ndarray], np.ndarray], t: float,
                     params: ReservoirParams, tol: float, k_max: float,
                     max_levels: int = 6, smooth_width: float = 1.0,
                     periods_per_panel: float = 1.0) -> QuadratureResult:
    """
    Integrate a stack of integrands sharing one set of nodes.

    ``integrands(k)`` returns an array of shape (m, len(k)). Convergence is
    declared when successive levels differ by at most ``tol`` times the
    integral of the absolute integrand, separately for every row.
    """
    previous = None
    errors = None
    for level in range(max_levels + 1):
        edges = panel_edges(t, params, k_max, level, smooth_width, periods_per_panel)
        nodes, weights = gauss_nodes(edges)
        f = np.atleast_2d(integrands(nodes))
        values = f @ weights
        scale = np.abs(f) @ weights
        if previous is not None:
            errors = np.abs(values - previous)
            if np.all(errors <= tol * scale):
                return QuadratureResult(values, errors, level, nodes.size)
        previous = values

    if errors is None:
        achieved = float("inf")
    else:
        with np.errstate(divide="ignore", invalid="ignore"):
            achieved = float(np.max(np.where(scale > 0, errors / scale, 0.0)))
    raise QuadratureError(
        f"panel quadrature did not reach tol={tol:g} after {max_levels} refinements",
        t=t,
        achieved_error=achieved,
    )


def adaptive_quad(func: Callable[[float], float], k_max: float, tol: float,
                  limit: int = 2000, t: float = None) -> float:
    """scipy QUADPACK on (0, k_max]; integration warnings become QuadratureError."""
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            value, abserr = integrate.quad(func, 0.0, k_max, epsabs=0.0, epsrel=tol, limit=limit)
        except integrate.IntegrationWarning as e:
            raise QuadratureError(f"adaptive quad failed: {e}", t=t)
    logger.debug(f"adaptive quad value={value:.12g} abserr={abserr:.2e}")
    return value
