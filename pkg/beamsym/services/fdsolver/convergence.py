"""Observed order of accuracy under simultaneous dx and dt refinement."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from beamsym.core.errors import ParameterError
from beamsym.core.formatting import to_csv
from beamsym.core.logging import get_logger
from beamsym.services.beam_model.beam import BeamConfig
from beamsym.services.beam_model.solution import ClosedFormSolution
from beamsym.services.fdsolver.compare import compare
from beamsym.services.fdsolver.grid import Grid
from beamsym.services.fdsolver.newmark import initial_data_from, simulate

logger = get_logger(__name__)

STORED_TIMES = 40


@dataclass
class ConvergenceStudy:
    n: list[int]
    dx: list[float]
    dt: list[float]
    errors: list[float]

    @property
    def orders(self) -> list[float]:
        """``log(e_k / e_{k+1}) / log(dx_k / dx_{k+1})`` for consecutive runs."""
        return [
            math.log(self.errors[k] / self.errors[k + 1]) / math.log(self.dx[k] / self.dx[k + 1])
            for k in range(len(self.errors) - 1)
        ]

    def to_csv(self) -> str:
        orders = [math.nan] + self.orders
        rows = zip(self.n, self.dx, self.dt, self.errors, orders)
        return to_csv(["n", "dx", "dt", "rel_max_err", "order"], rows)


def convergence_study(
    config: BeamConfig,
    solution: ClosedFormSolution,
    n_values: Sequence[int] = (31, 63, 127),
    dt: float = 4e-3,
    t_end: float = 1.0,
) -> ConvergenceStudy:
    """Run ``simulate`` on each grid with ``dt`` scaled like ``dx``.

    ``dt`` belongs to the first grid.  Errors are relative maximum errors
    against ``solution``.
    """
    if len(n_values) < 2:
        raise ParameterError("a convergence study needs at least two grids")
    grids = [Grid(n, config.domain) for n in n_values]
    study = ConvergenceStudy(n=[], dx=[], dt=[], errors=[])
    for grid in grids:
        step = dt * grid.dx / grids[0].dx
        h, v0 = initial_data_from(solution, grid)
        steps = max(1, round(t_end / step))
        traj = simulate(
            config, h, v0, dt=step, t_end=t_end, grid=grid,
            store_every=max(1, steps // STORED_TIMES),
        )
        error = compare(traj, solution).relative_max_error
        study.n.append(grid.n)
        study.dx.append(grid.dx)
        study.dt.append(step)
        study.errors.append(error)
        logger.info("n=%d dt=%.3g: relative max error %.3e", grid.n, step, error)
    return study
