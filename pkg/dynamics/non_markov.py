import logging
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np
from scipy.optimize import brentq

from decoherence.kernels import Channel, KernelEvaluator
from decoherence.profile import DecoherenceProfile
from decoherence.rules import CP_TOL

logger = logging.getLogger(__name__)

Interval = Tuple[float, float]


@dataclass
class NonMarkovReport:
    negative_plus: List[Interval] = field(default_factory=list)
    negative_minus: List[Interval] = field(default_factory=list)
    cp: bool = True
    min_gamma: float = 0.0

    @property
    def divisible(self) -> bool:
        return not (self.negative_plus or self.negative_minus)


def _negative_intervals(t: np.ndarray, rate: np.ndarray, refine) -> List[Interval]:
    """Maximal runs where the rate is negative, with endpoints refined by root finding."""
    negative = rate < 0
    intervals = []
    i = 0
    n = t.size
    while i < n:
        if not negative[i]:
            i += 1
            continue
        j = i
        while j + 1 < n and negative[j + 1]:
            j += 1
        start = float(t[i]) if i == 0 else refine(float(t[i - 1]), float(t[i]))
        end = float(t[j]) if j == n - 1 else refine(float(t[j]), float(t[j + 1]))
        intervals.append((start, end))
        i = j + 1
    return intervals


def non_markov_report(profile: DecoherenceProfile, refine: bool = True) -> NonMarkovReport:
    """
    Locate the negative-rate intervals of Gamma_+ and Gamma_-.

    Sign changes are bracketed on the grid and refined with brentq on the
    quadrature rate; with ``refine=False`` the tabulated rates are linearly
    interpolated instead.
    """
    evaluator = KernelEvaluator(profile.params, profile.tol,
                                k_max=profile.metadata.get("k_max", 10.0),
                                cross_talk=profile.cross_talk)

    def refiner(rates: np.ndarray, channel: Channel):
        def locate(a: float, b: float) -> float:
            if refine:
                f = lambda s: evaluator.evaluate(s).rate(channel)
                fa, fb = f(a), f(b)
                if fa * fb < 0:
                    return float(brentq(f, a, b, xtol=1e-10))
            fa = float(np.interp(a, profile.t_grid, rates))
            fb = float(np.interp(b, profile.t_grid, rates))
            return a + (b - a) * fa / (fa - fb) if fa != fb else a
        return locate

    t = profile.t_grid
    neg_plus = _negative_intervals(t, profile.rate_plus, refiner(profile.rate_plus, Channel.PLUS))
    neg_minus = _negative_intervals(t, profile.rate_minus, refiner(profile.rate_minus, Channel.MINUS))
    min_gamma = float(min(profile.gamma_plus.min(), profile.gamma_minus.min()))
    report = NonMarkovReport(
        negative_plus=neg_plus,
        negative_minus=neg_minus,
        cp=min_gamma >= -CP_TOL,
        min_gamma=min_gamma,
    )
    if not report.divisible:
        logger.info(f"Negative dephasing rates: plus={neg_plus} minus={neg_minus}")
    return report
