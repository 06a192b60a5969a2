"""Separability test for a candidate spatial profile.

For ``u = phi(x) F(t)`` the beam equation splits into ``F'' = S F`` exactly
when ``S(x) = -L[phi] / (m phi)`` is constant, where
``L[phi] = (EI phi'')'' - (T phi')'``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from beamsym.core.config import settings
from beamsym.core.errors import ParameterError
from beamsym.core.formatting import format_float, to_csv
from beamsym.core.logging import get_logger
from beamsym.services.beam_model.beam import BeamConfig
from beamsym.services.beam_model.coefficients import CoefficientFn

logger = get_logger(__name__)

_FLOOR = 1e-12
_RELATIVE_FLOOR = 1e-7


@dataclass
class SeparationReport:
    """Per-point separation values and the constancy verdict.

    Attributes:
        s: Mean of the samples; NaN when there are none.  Set to exactly
            0.0 when it is indistinguishable from zero.
        samples: ``(x, S(x))`` pairs at the usable grid points.
        max_deviation: ``max |S(x) - s|``.
        constant: Whether the samples agree to ``tolerance``.
        floor: Denominator floor used in the verdict.
        excluded: Grid points skipped because ``phi(x) = 0``.
    """

    s: float
    samples: list[tuple[float, float]]
    max_deviation: float
    constant: bool
    floor: float
    tolerance: float
    excluded: list[float] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_csv(self) -> str:
        footer = [f"S={format_float(self.s)} constant={str(self.constant).lower()}"]
        footer.extend(self.notes)
        return to_csv(["x", "S"], self.samples, footer)


def spatial_operator_terms(config: BeamConfig, phi: CoefficientFn, x: float) -> tuple[float, ...]:
    """The five expanded terms of ``L[phi]`` at ``x``."""
    ei, tension, p = config.ei.jet(x), config.t.jet(x), phi.jet(x)
    return (
        ei.value * p.slot(4),
        2.0 * ei.slot(1) * p.slot(3),
        ei.slot(2) * p.slot(2),
        -tension.slot(1) * p.slot(1),
        -tension.value * p.slot(2),
    )


def separation_grid(
    domain: tuple[float, float], n: int = settings.separation_min_points
) -> list[float]:
    """``n`` cell midpoints of the domain; endpoints are avoided."""
    x_min, length = domain
    h = (length - x_min) / n
    return [x_min + (k + 0.5) * h for k in range(n)]


def separation_constant(
    config: BeamConfig,
    phi: CoefficientFn,
    grid: Sequence[float] | None = None,
    tol: float = settings.separation_tolerance,
    zero_tol: float = settings.zero_separation_tolerance,
) -> SeparationReport:
    """Sample ``S(x)`` over ``grid`` and decide whether it is constant.

    Raises:
        ParameterError: Fewer than two usable grid points.
    """
    if grid is None:
        grid = separation_grid(config.domain)
    samples: list[tuple[float, float]] = []
    excluded: list[float] = []
    scales: list[float] = []
    for x in grid:
        x = float(x)
        config.require_in_domain(x)
        phi_value = phi.value(x)
        if phi_value == 0:
            excluded.append(x)
            continue
        terms = spatial_operator_terms(config, phi, x)
        denominator = config.m.value(x) * phi_value
        samples.append((x, -math.fsum(terms) / denominator))
        scales.append(max(abs(v) for v in terms) / abs(denominator))

    if len(samples) < 2:
        raise ParameterError(
            f"separation test needs at least two points with phi != 0, got {len(samples)}"
        )

    values = np.array([s for _, s in samples])
    mean = float(np.mean(values))
    deviation = float(np.max(np.abs(values - mean)))
    floor = max(_FLOOR, _RELATIVE_FLOOR * max(scales))
    constant = deviation / max(abs(mean), floor) <= tol
    if constant and abs(mean) <= max(zero_tol, floor):
        mean = 0.0

    notes = [f"phi = 0 at x={x!r}; point excluded" for x in excluded]
    if len(grid) < settings.separation_min_points:
        notes.append(f"only {len(grid)} grid points; verdict is weaker than usual")
    logger.info(
        "Separation test: %s (S=%.6g, max deviation %.3e over %d points)",
        "constant" if constant else "not constant",
        mean,
        deviation,
        len(samples),
    )
    return SeparationReport(
        s=mean,
        samples=samples,
        max_deviation=deviation,
        constant=bool(constant),
        floor=floor,
        tolerance=tol,
        excluded=excluded,
        notes=notes,
    )
