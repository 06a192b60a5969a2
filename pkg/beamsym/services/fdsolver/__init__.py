"""Method-of-lines solver for cantilever (clamped-free) beams."""

from beamsym.services.fdsolver.compare import ComparisonTable, compare
from beamsym.services.fdsolver.convergence import ConvergenceStudy, convergence_study
from beamsym.services.fdsolver.grid import MIN_INTERIOR_POINTS, Grid
from beamsym.services.fdsolver.newmark import (
    Trajectory,
    initial_data_from,
    sample_initial,
    simulate,
    strided_indices,
)
from beamsym.services.fdsolver.operator import (
    Discretization,
    apply_interior,
    discretize,
    static_deflection,
)

__all__ = [
    "ComparisonTable",
    "ConvergenceStudy",
    "Discretization",
    "Grid",
    "MIN_INTERIOR_POINTS",
    "Trajectory",
    "apply_interior",
    "compare",
    "convergence_study",
    "discretize",
    "initial_data_from",
    "sample_initial",
    "simulate",
    "static_deflection",
    "strided_indices",
]
