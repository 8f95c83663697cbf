import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Union

import numpy as np

from core.errors import ParameterDomainError
from core.params import ReservoirParams, scale_scattering
from core.states import Sign
from decoherence.kernels import DEFAULT_TOL
from decoherence.profile import build_profile
from scenarios.classify import (
    DEFAULT_EPS_C,
    LABEL_RANK,
    DynamicsClass,
    DynamicsLabel,
    classification_grid,
    classify_profile,
    refine_tail,
    suggest_horizon,
    transient_end,
)

logger = logging.getLogger(__name__)

PHASE_DIAGRAM_COLUMNS = ("c", "a_B_over_aRb", "label", "residual", "death_time", "revival_count")


@dataclass
class PhaseDiagram:
    c_values: np.ndarray
    a_values: np.ndarray
    cells: List[List[DynamicsClass]]  # cells[i_a][i_c]
    sign: Sign
    params: Dict[str, float] = field(default_factory=dict)

    def labels(self) -> np.ndarray:
        return np.array([[cell.label.value for cell in row] for row in self.cells])

    def count(self, label: DynamicsLabel) -> int:
        return sum(cell.label is label for row in self.cells for cell in row)

    @property
    def inconclusive(self) -> int:
        return self.count(DynamicsLabel.INCONCLUSIVE)

    def rows(self) -> List[List[str]]:
        out = []
        for i_a, a in enumerate(self.a_values):
            for i_c, c in enumerate(self.c_values):
                cell = self.cells[i_a][i_c]
                death = "nan" if cell.death_time is None else f"{cell.death_time:.15g}"
                out.append([f"{c:.15g}", f"{a:.15g}", cell.label.value,
                            f"{cell.residual:.15g}", death, str(cell.revival_count)])
        return out

    def to_csv(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        np.savetxt(path, np.array(self.rows(), dtype=object), fmt="%s", delimiter=",",
                   header=",".join(PHASE_DIAGRAM_COLUMNS), comments="")
        logger.info(f"Wrote phase diagram ({len(self.a_values)}x{len(self.c_values)}) to {path}")
        return path


def phase_diagram(template: ReservoirParams, c_values: Sequence[float], a_values: Sequence[float],
                  sign: Union[Sign, str], a_ref_ratio: float = 1.0, horizon: Optional[float] = None,
                  eps_c: float = DEFAULT_EPS_C, tol: float = DEFAULT_TOL, cross_talk: bool = True,
                  progress: Optional[Callable[[int, int], None]] = None) -> PhaseDiagram:
    """
    Classify every (a_B, c) cell.

    ``a_values`` are scattering lengths in units of a_Rb; ``template`` holds the
    reservoir at a_B = a_ref_ratio * a_Rb, and u is rescaled linearly from it.
    One profile per a_B column serves every c; its coarse tail is refined
    around the concurrence crossings of all c at once.
    """
    c_values = np.asarray(c_values, dtype=float)
    a_values = np.asarray(a_values, dtype=float)
    if c_values.size == 0 or a_values.size == 0:
        raise ParameterDomainError("phase diagram ranges must be nonempty")
    sign = Sign.parse(sign)

    cells = []
    for i, a in enumerate(a_values):
        p = scale_scattering(template, a / a_ref_ratio)
        t_h = horizon or suggest_horizon(p)
        profile = build_profile(p, classification_grid(p, t_h), tol=tol, cross_talk=cross_talk)
        profile = refine_tail(profile, c_values, sign, transient_end(p, t_h), eps_c)
        cells.append([classify_profile(profile, float(c), sign, eps_c) for c in c_values])
        logger.debug(f"Classified column a_B/a_Rb={a:g} (u={p.u:.5g}, horizon={t_h:g})")
        if progress:
            progress(i + 1, a_values.size)

    diagram = PhaseDiagram(c_values, a_values, cells, sign, params=template.as_dict())
    if diagram.inconclusive:
        logger.warning(f"{diagram.inconclusive} phase-diagram cells are inconclusive")
    return diagram


def boundary_violations(diagram: PhaseDiagram) -> List[Dict[str, float]]:
    """Pairs c1 < c2 in one a_B column where c1 traps but c2 dies suddenly."""
    violations = []
    for i_a, row in enumerate(diagram.cells):
        for i1, low in enumerate(row):
            if low.label is not DynamicsLabel.TRAPPING:
                continue
            for i2 in range(i1 + 1, len(row)):
                if row[i2].label is DynamicsLabel.SUDDEN_DEATH:
                    violations.append({
                        "a_B_over_aRb": float(diagram.a_values[i_a]),
                        "c_trapping": float(diagram.c_values[i1]),
                        "c_sudden_death": float(diagram.c_values[i2]),
                    })
    return violations


def sensitive_band(diagram: PhaseDiagram) -> List[Dict[str, object]]:
    """
    Per a_B column, the c interval between the last SUDDEN_DEATH cell and the
    first TRAPPING cell, and whether the labels are ordered along c.
    """
    bands = []
    for i_a, row in enumerate(diagram.cells):
        labels = [cell.label for cell in row]
        ranks = [LABEL_RANK.get(label, -1) for label in labels]
        dead = [diagram.c_values[i] for i, lb in enumerate(labels) if lb is DynamicsLabel.SUDDEN_DEATH]
        trap = [diagram.c_values[i] for i, lb in enumerate(labels) if lb is DynamicsLabel.TRAPPING]
        c_low = float(max(dead)) if dead else None
        c_high = float(min(trap)) if trap else None
        bands.append({
            "a_B_over_aRb": float(diagram.a_values[i_a]),
            "c_low": c_low,
            "c_high": c_high,
            "width": c_high - c_low if c_low is not None and c_high is not None else None,
            "ordered": -1 not in ranks and all(r1 <= r2 for r1, r2 in zip(ranks, ranks[1:])),
        })
    return bands


def temperature_comparison(template: ReservoirParams, c_values: Sequence[float], a_values: Sequence[float],
                           sign: Union[Sign, str], factor: float = 10.0, **kwargs) -> Dict[str, object]:
    """Run the diagram at theta and at factor * theta and compare the sudden-death areas."""
    if template.theta <= 0:
        raise ParameterDomainError("temperature comparison needs theta > 0")
    if factor <= 0:
        raise ParameterDomainError(f"temperature factor must be > 0, got {factor}")
    cold = phase_diagram(template, c_values, a_values, sign, **kwargs)
    hot = phase_diagram(template.replace(theta=template.theta * factor), c_values, a_values, sign, **kwargs)
    sd_cold = cold.count(DynamicsLabel.SUDDEN_DEATH)
    sd_hot = hot.count(DynamicsLabel.SUDDEN_DEATH)
    logger.info(f"Sudden-death cells: {sd_cold} at theta={template.theta:.4g}, {sd_hot} at x{factor:g}")
    return {
        "cold": cold,
        "hot": hot,
        "sudden_death_cold": sd_cold,
        "sudden_death_hot": sd_hot,
        "enlarged": sd_hot > sd_cold,
    }
