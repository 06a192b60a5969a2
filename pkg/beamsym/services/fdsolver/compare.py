"""Numerical trajectory against a closed-form solution."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from beamsym.core.errors import DomainMismatchError
from beamsym.core.formatting import format_float, to_csv
from beamsym.core.logging import get_logger
from beamsym.services.beam_model.solution import ClosedFormSolution
from beamsym.services.fdsolver.newmark import Trajectory, strided_indices

logger = get_logger(__name__)


@dataclass
class ComparisonTable:
    """Pointwise and per-time errors of a trajectory.

    Attributes:
        times: Stored times of the trajectory.
        x: Grid nodes.
        numerical: ``u_num`` with shape ``(len(times), len(x))``.
        exact: ``u_exact`` with the same shape.
        max_error: Largest ``|u_num - u_exact|`` at each time.
        rms_error: Root-mean-square error at each time.
    """

    times: np.ndarray
    x: np.ndarray
    numerical: np.ndarray
    exact: np.ndarray
    max_error: np.ndarray
    rms_error: np.ndarray

    @property
    def amplitude(self) -> float:
        return float(np.max(np.abs(self.exact)))

    @property
    def worst_error(self) -> float:
        return float(np.max(self.max_error))

    @property
    def relative_max_error(self) -> float:
        """``max |u_num - u_exact| / max |u_exact|`` over every stored point."""
        amplitude = self.amplitude
        return self.worst_error / amplitude if amplitude > 0 else self.worst_error

    @property
    def relative_rms_error(self) -> float:
        """Overall RMS error relative to the amplitude."""
        rms = math.sqrt(float(np.mean(self.rms_error**2)))
        amplitude = self.amplitude
        return rms / amplitude if amplitude > 0 else rms

    def to_csv(self, stride: int = 1, space_stride: int = 1) -> str:
        rows = []
        for index in strided_indices(len(self.times), stride):
            t = float(self.times[index])
            for k in range(0, len(self.x), space_stride):
                num, exact = float(self.numerical[index, k]), float(self.exact[index, k])
                rows.append((t, float(self.x[k]), num, exact, abs(num - exact)))
        footer = [
            f"max_abs_err={format_float(self.worst_error)}",
            f"rel_max_err={format_float(self.relative_max_error)}",
            f"rel_rms_err={format_float(self.relative_rms_error)}",
        ]
        return to_csv(["t", "x", "u_num", "u_exact", "abs_err"], rows, footer)


def compare(traj: Trajectory, sol: ClosedFormSolution) -> ComparisonTable:
    """Evaluate ``sol`` at every stored (t, x) of ``traj``.

    Raises:
        DomainMismatchError: ``sol`` lives on another spatial domain.
    """
    if sol.domain is not None and not np.allclose(sol.domain, traj.domain, rtol=0.0, atol=1e-12):
        raise DomainMismatchError(
            f"trajectory domain {list(traj.domain)} differs from solution domain {list(sol.domain)}"
        )
    x = traj.grid.points
    exact = np.array([[sol.value(float(xk), float(t)) for xk in x] for t in traj.times])
    diff = np.abs(traj.states - exact)
    table = ComparisonTable(
        times=traj.times,
        x=x,
        numerical=traj.states,
        exact=exact,
        max_error=diff.max(axis=1),
        rms_error=np.sqrt(np.mean(diff**2, axis=1)),
    )
    logger.info(
        "Compared %d times: relative max error %.3e, relative RMS error %.3e",
        len(traj.times),
        table.relative_max_error,
        table.relative_rms_error,
    )
    return table
