"""Conservative finite differences for ``(EI u'')'' - (T u')'``.

Unknowns are ``u_1 .. u_J`` with ``J = n + 1``.  The clamped end is
eliminated with ``u_0 = 0`` and the ghost ``u_{-1} = u_1``.  Bending is
assembled from nodal moments ``M_k = EI_k (u_{k+1} - 2 u_k + u_{k-1}) / dx^2``;
the free end sets ``M_J = 0`` and mirrors ``M_{J+1} = M_{J-1}`` (zero shear),
so no coefficient is evaluated outside the domain.  Tension uses midpoint
fluxes; at the free end ``u'' = 0`` leaves ``-T'(l) u'(l)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import sparse
from scipy.sparse import linalg as sparse_linalg

from beamsym.core.errors import DomainMismatchError, EvaluationError, ParameterError
from beamsym.core.logging import get_logger
from beamsym.services.beam_model.beam import BeamConfig
from beamsym.services.fdsolver.grid import Grid

logger = get_logger(__name__)


@dataclass(frozen=True)
class Discretization:
    """Assembled operators on one grid.

    Attributes:
        grid: The grid.
        bending: ``A4``, the discrete ``(EI u'')''``.
        tension: ``A2``, the discrete ``(T u')'``.
        mass: Nodal masses ``m(x_1) .. m(x_J)``.
    """

    grid: Grid
    bending: sparse.csr_matrix
    tension: sparse.csr_matrix
    mass: np.ndarray

    @property
    def stiffness(self) -> sparse.csr_matrix:
        """``K = A4 - A2``, so that the discrete equation is ``M u'' + K u = f``."""
        return (self.bending - self.tension).tocsr()

    @property
    def mass_matrix(self) -> sparse.dia_matrix:
        return sparse.diags(self.mass)

    def apply(self, u: np.ndarray) -> np.ndarray:
        """``L[u]`` at ``x_1 .. x_J`` for displacements at the same nodes."""
        u = np.asarray(u, dtype=float)
        if u.shape != (self.grid.unknowns,):
            raise ParameterError(
                f"expected {self.grid.unknowns} nodal values, got shape {u.shape}"
            )
        return self.stiffness @ u

    def asymmetry(self, margin: int = 3) -> float:
        """``max |K - K^T|`` over the block ``margin`` rows away from both ends,
        relative to ``max |K|`` there."""
        block = self.stiffness.toarray()[margin:-margin, margin:-margin]
        scale = float(np.max(np.abs(block)))
        return float(np.max(np.abs(block - block.T))) / scale if scale > 0 else 0.0


def _sample(config: BeamConfig, name: str, xs: np.ndarray) -> np.ndarray:
    fn = config.field(name)
    try:
        return np.array([fn.value(float(x)) for x in xs])
    except EvaluationError as exc:
        raise EvaluationError(f"discretizing {name}: {exc}") from exc


def _curvature_matrix(j: int) -> sparse.csr_matrix:
    """``u_{k+1} - 2 u_k + u_{k-1}`` for k = 0 .. J-1 in terms of u_1 .. u_J."""
    c = sparse.lil_matrix((j, j))
    c[0, 0] = 2.0
    for k in range(1, j):
        c[k, k] = 1.0
        c[k, k - 1] = -2.0
        if k >= 2:
            c[k, k - 2] = 1.0
    return c.tocsr()


def _moment_difference_matrix(j: int) -> sparse.csr_matrix:
    """``M_{k+1} - 2 M_k + M_{k-1}`` for k = 1 .. J in terms of M_0 .. M_{J-1}."""
    d = sparse.lil_matrix((j, j))
    for k in range(1, j):
        d[k - 1, k - 1] = 1.0
        d[k - 1, k] = -2.0
        if k + 1 <= j - 1:
            d[k - 1, k + 1] = 1.0
    d[j - 1, j - 1] = 2.0
    return d.tocsr()


def _tension_matrix(t_half: np.ndarray, dt_end: float, j: int, dx: float) -> sparse.csr_matrix:
    a = sparse.lil_matrix((j, j))
    for k in range(1, j):
        row = k - 1
        a[row, k] = t_half[k] / dx**2
        a[row, k - 1] = -(t_half[k] + t_half[k - 1]) / dx**2
        if k >= 2:
            a[row, k - 2] = t_half[k - 1] / dx**2
    a[j - 1, j - 1] = dt_end / dx
    a[j - 1, j - 2] = -dt_end / dx
    return a.tocsr()


def discretize(config: BeamConfig, grid: Grid) -> Discretization:
    """Assemble the spatial operator of ``config`` on ``grid``.

    Raises:
        DomainMismatchError: The grid does not cover the beam domain.
        ParameterError: ``m`` is not positive at some node.
        EvaluationError: A coefficient cannot be evaluated on the grid.
    """
    if not np.allclose(grid.domain, config.domain, rtol=0.0, atol=1e-12):
        raise DomainMismatchError(
            f"grid domain {list(grid.domain)} differs from beam domain {list(config.domain)}"
        )
    j, dx = grid.unknowns, grid.dx
    nodes = grid.points
    ei = _sample(config, "ei", nodes[:j])
    mass = _sample(config, "m", nodes[1:])
    bad = nodes[1:][mass <= 0]
    if bad.size:
        raise ParameterError(f"m must be positive on the grid; m <= 0 at x={float(bad[0])!r}")
    t_half = _sample(config, "t", grid.midpoints())
    try:
        dt_end = config.t.jet(float(nodes[-1])).slot(1)
    except EvaluationError as exc:
        raise EvaluationError(f"discretizing t: {exc}") from exc

    bending = _moment_difference_matrix(j) @ sparse.diags(ei) @ _curvature_matrix(j) / dx**4
    tension = _tension_matrix(t_half, dt_end, j, dx)
    logger.debug("Discretized %s on %d unknowns (dx=%.3e)", config.label or "beam", j, dx)
    return Discretization(grid=grid, bending=bending.tocsr(), tension=tension, mass=mass)


def apply_interior(
    config: BeamConfig, grid: Grid, samples: Callable[[float], float] | np.ndarray
) -> np.ndarray:
    """The stencil applied to ``samples`` at ``x_1 .. x_J``.

    ``samples`` is a function of x or nodal values at ``x_1 .. x_J`` (or
    ``x_0 .. x_J``, in which case u_0 is dropped).
    """
    if callable(samples):
        u = np.array([float(samples(float(xk))) for xk in grid.points[1:]])
    else:
        u = np.asarray(samples, dtype=float)
        if u.shape == (grid.unknowns + 1,):
            u = u[1:]
    return discretize(config, grid).apply(u)

def static_deflection(
    config: BeamConfig,
    grid: Grid,
    tip_shear: float = 1.0,
    load: np.ndarray | None = None,
) -> np.ndarray:
    """Solve ``L[u] = load`` with the free end carrying ``-(EI u'')'(l) = tip_shear``.

    Returns displacements at every node ``x_0 .. x_J``.
    """
    disc = discretize(config, grid)
    rhs = np.zeros(grid.unknowns) if load is None else np.array(load, dtype=float)
    # The shear enters through the mirrored ghost moment M_{J+1} = M_{J-1} - 2 dx V.
    rhs[-1] += 2.0 * tip_shear / grid.dx
    u = sparse_linalg.spsolve(disc.stiffness.tocsc(), rhs)
    return np.concatenate(([0.0], u))
