"""Uniform grids for the method-of-lines solver."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from beamsym.core.errors import ParameterError

MIN_INTERIOR_POINTS = 16


@dataclass(frozen=True)
class Grid:
    """Nodes ``x_0 .. x_{n+1}`` spanning ``[x_min, l]``.

    ``x_0`` is the clamped end and ``x_{n+1}`` the free end; the unknowns
    of the discrete problem are the displacements at ``x_1 .. x_{n+1}``.
    """

    n: int
    domain: tuple[float, float] = (0.0, 1.0)

    def __post_init__(self) -> None:
        if int(self.n) != self.n or self.n < MIN_INTERIOR_POINTS:
            raise ParameterError(
                f"grid needs an integer n >= {MIN_INTERIOR_POINTS} interior points, got {self.n!r}"
            )
        x_min, length = (float(v) for v in self.domain)
        if not x_min < length:
            raise ParameterError(f"grid domain needs x_min < l, got [{x_min!r}, {length!r}]")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "domain", (x_min, length))

    @property
    def dx(self) -> float:
        return (self.domain[1] - self.domain[0]) / (self.n + 1)

    @cached_property
    def points(self) -> np.ndarray:
        return self.domain[0] + self.dx * np.arange(self.n + 2)

    @property
    def unknowns(self) -> int:
        return self.n + 1

    def midpoints(self) -> np.ndarray:
        """``x_{k+1/2}`` for ``k = 0 .. n``."""
        return self.points[:-1] + 0.5 * self.dx

    def refined(self) -> "Grid":
        """The grid with half the spacing."""
        return Grid(2 * (self.n + 1) - 1, self.domain)
