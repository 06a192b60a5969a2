"""Temporal factor from the separation constant, and product assembly."""

from __future__ import annotations

import math

from beamsym.core.config import settings
from beamsym.core.logging import get_logger
from beamsym.services.beam_model.coefficients import CoefficientFn
from beamsym.services.beam_model.solution import ClosedFormSolution, TemporalFactor

logger = get_logger(__name__)


def temporal_solve(
    s: float,
    f0: float,
    f0dot: float,
    zero_tol: float = settings.zero_separation_tolerance,
) -> TemporalFactor:
    """Solve ``F'' = S F`` with ``F(0) = f0`` and ``F'(0) = f0dot``."""
    if s > zero_tol:
        rate = math.sqrt(s)
        return TemporalFactor.hyperbolic(
            rate, (f0 + f0dot / rate) / 2.0, (f0 - f0dot / rate) / 2.0
        )
    if s < -zero_tol:
        rate = math.sqrt(-s)
        return TemporalFactor.trigonometric(rate, f0, f0dot / rate)
    return TemporalFactor.affine(f0, f0dot)


def assemble_solution(
    phi: CoefficientFn,
    temporal: TemporalFactor,
    domain: tuple[float, float] | None = None,
) -> ClosedFormSolution:
    return ClosedFormSolution(profile=phi, temporal=temporal, domain=domain)
