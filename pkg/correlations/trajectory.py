import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Union

import numpy as np

from core.states import TwoQubitState
from correlations.concurrence import concurrence
from correlations.discord import discord
from correlations.entropy import mutual_information

logger = logging.getLogger(__name__)

CSV_FORMAT = "%.15g"


@dataclass
class CorrelationTrajectory:
    t_grid: np.ndarray
    concurrence: np.ndarray
    mutual_information: np.ndarray
    discord: Optional[np.ndarray] = None

    def columns(self):
        names = ["t", "concurrence"]
        data = [self.t_grid, self.concurrence]
        if self.discord is not None:
            names.append("discord")
            data.append(self.discord)
        names.append("mutual_information")
        data.append(self.mutual_information)
        return names, np.column_stack(data)

    def to_csv(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        names, table = self.columns()
        np.savetxt(path, table, fmt=CSV_FORMAT, delimiter=",", header=",".join(names), comments="")
        logger.info(f"Wrote correlation trajectory to {path}")
        return path


def correlation_trajectory(states: Iterable[TwoQubitState], t_grid, with_discord: bool = False,
                           discord_method: str = "auto") -> CorrelationTrajectory:
    states = list(states)
    t_grid = np.asarray(t_grid, dtype=float)
    if len(states) != t_grid.size:
        raise ValueError(f"{len(states)} states for {t_grid.size} grid points")
    conc = np.array([concurrence(s) for s in states])
    mi = np.array([mutual_information(s) for s in states])
    disc = np.array([discord(s, method=discord_method) for s in states]) if with_discord else None
    return CorrelationTrajectory(t_grid=t_grid, concurrence=conc, mutual_information=mi, discord=disc)
