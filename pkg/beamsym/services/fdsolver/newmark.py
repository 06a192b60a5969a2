"""Average-acceleration Newmark time stepping of ``M u'' + K u = 0``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np
from scipy import sparse
from scipy.sparse import linalg as sparse_linalg

from beamsym.core.config import settings
from beamsym.core.errors import ParameterError, SolverError
from beamsym.core.formatting import to_csv
from beamsym.core.logging import get_logger
from beamsym.services.beam_model.beam import BeamConfig
from beamsym.services.beam_model.solution import DisplacementField
from beamsym.services.fdsolver.grid import Grid
from beamsym.services.fdsolver.operator import discretize

logger = get_logger(__name__)

InitialData = Union[Callable[[float], float], np.ndarray, None]


@dataclass
class Trajectory:
    """Displacements at every stored time and every node ``x_0 .. x_{n+1}``.

    Attributes:
        times: Stored times, starting at 0.
        states: Array of shape ``(len(times), n + 2)``.
        grid: Spatial grid.
        metadata: Scheme name, dt, beta, gamma and step count.
    """

    times: np.ndarray
    states: np.ndarray
    grid: Grid
    metadata: dict[str, object] = field(default_factory=dict)

    @property
    def domain(self) -> tuple[float, float]:
        return self.grid.domain

    def to_csv(self, stride: int = 1, space_stride: int = 1) -> str:
        """``t,x,u`` rows for every ``stride``-th stored time (the last is always kept)."""
        if stride < 1 or space_stride < 1:
            raise ParameterError("output strides must be positive")
        rows = []
        for index in strided_indices(len(self.times), stride):
            t = float(self.times[index])
            for x, u in zip(self.grid.points[::space_stride], self.states[index, ::space_stride]):
                rows.append((t, float(x), float(u)))
        return to_csv(["t", "x", "u"], rows)


def strided_indices(count: int, stride: int) -> list[int]:
    indices = list(range(0, count, stride))
    if indices[-1] != count - 1:
        indices.append(count - 1)
    return indices


def sample_initial(data: InitialData, grid: Grid) -> np.ndarray:
    """Nodal values at ``x_1 .. x_{n+1}`` from a callable, an array or None (zeros)."""
    if data is None:
        return np.zeros(grid.unknowns)
    if callable(data):
        return np.array([float(data(float(x))) for x in grid.points[1:]])
    values = np.asarray(data, dtype=float)
    if values.shape == (grid.n + 2,):
        values = values[1:]
    if values.shape != (grid.unknowns,):
        raise ParameterError(
            f"initial data needs {grid.unknowns} or {grid.n + 2} values, got shape {values.shape}"
        )
    return values.copy()


def initial_data_from(solution: DisplacementField, grid: Grid) -> tuple[np.ndarray, np.ndarray]:
    """``u(x, 0)`` and ``u_t(x, 0)`` of a closed-form field at the unknown nodes."""
    jets = [solution.jet(float(x), 0.0) for x in grid.points[1:]]
    return np.array([j.value for j in jets]), np.array([j.slot(0, 1) for j in jets])


def simulate(
    config: BeamConfig,
    h: InitialData,
    v0: InitialData = None,
    dt: float = settings.fd_time_step,
    t_end: float = settings.fd_t_end,
    grid: Grid | None = None,
    beta: float = 0.25,
    gamma: float = 0.5,
    store_every: int = 1,
) -> Trajectory:
    """Integrate the semi-discrete beam equation from ``u = h``, ``u_t = v0``.

    Args:
        config: Beam coefficients; the grid spans its domain.
        h: Initial displacement.
        v0: Initial velocity (zero when None).
        dt: Time step.
        t_end: Final time; the last step is shortened to land on it.
        grid: Spatial grid (``settings.fd_interior_points`` by default).
        beta: Newmark beta.
        gamma: Newmark gamma.
        store_every: Keep every ``store_every``-th step (the last is always kept).

    Raises:
        ParameterError: Non-positive ``dt``, negative ``t_end`` or bad initial data.
        SolverError: The factorization or a step produced no finite solution.
    """
    if not dt > 0:
        raise ParameterError(f"dt must be positive, got {dt!r}")
    if t_end < 0:
        raise ParameterError(f"t_end must be non-negative, got {t_end!r}")
    grid = grid or Grid(settings.fd_interior_points, config.domain)
    disc = discretize(config, grid)
    stiffness = disc.stiffness.tocsc()
    mass = disc.mass

    u = sample_initial(h, grid)
    v = sample_initial(v0, grid)
    a = -(stiffness @ u) / mass

    steps = int(np.ceil(t_end / dt - 1e-9)) if t_end > 0 else 0
    times, states = [0.0], [u.copy()]
    t = 0.0
    factor, factor_dt = None, None
    for step in range(1, steps + 1):
        h_step = dt
        if step == steps:
            last = t_end - (steps - 1) * dt
            h_step = dt if abs(last - dt) <= 1e-9 * dt else last
        if factor is None or h_step != factor_dt:
            factor = _factorize(stiffness, mass, h_step, beta, step)
            factor_dt = h_step
        a0 = 1.0 / (beta * h_step**2)
        a2 = 1.0 / (beta * h_step)
        a3 = 1.0 / (2.0 * beta) - 1.0
        a6 = h_step * (1.0 - gamma)
        a7 = gamma * h_step

        rhs = mass * (a0 * u + a2 * v + a3 * a)
        u_new = factor.solve(rhs)
        if not np.all(np.isfinite(u_new)):
            raise SolverError(f"non-finite displacement at step {step} (t={t + h_step:.6g})")
        a_new = a0 * (u_new - u) - a2 * v - a3 * a
        v = v + a6 * a + a7 * a_new
        u, a = u_new, a_new
        t = t_end if step == steps else step * dt
        if step % store_every == 0 or step == steps:
            times.append(t)
            states.append(u.copy())

    full = np.column_stack([np.zeros(len(states)), np.array(states)])
    logger.info(
        "Simulated %s: %d steps of dt=%.3g on %d nodes", config.label or "beam", steps, dt, grid.n + 2
    )
    return Trajectory(
        times=np.array(times),
        states=full,
        grid=grid,
        metadata={
            "scheme": "newmark",
            "beta": beta,
            "gamma": gamma,
            "dt": dt,
            "steps": steps,
        },
    )


def _factorize(
    stiffness: sparse.csc_matrix, mass: np.ndarray, dt: float, beta: float, step: int
) -> sparse_linalg.SuperLU:
    effective = (stiffness + sparse.diags(mass / (beta * dt**2))).tocsc()
    try:
        return sparse_linalg.splu(effective)
    except RuntimeError as exc:
        raise SolverError(f"effective stiffness is singular at step {step}: {exc}") from exc

