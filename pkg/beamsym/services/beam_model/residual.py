"""The beam operator applied to a candidate displacement field.

    EI u_xxxx + 2 EI' u_xxx + EI'' u_xx + m u_tt - T' u_x - T u_xx

is the expanded form of ``(EI u_xx)_xx + m u_tt - (T u_x)_x``.  Terms can
differ by many orders of magnitude across coefficient families, so the
relative residual divides by the largest individual term.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from beamsym.core.errors import EvaluationError
from beamsym.core.logging import get_logger
from beamsym.services.beam_model.beam import BeamConfig
from beamsym.services.beam_model.solution import DisplacementField

logger = get_logger(__name__)

TERM_NAMES = (
    "ei_u_xxxx",
    "2_dei_u_xxx",
    "ddei_u_xx",
    "m_u_tt",
    "-dt_u_x",
    "-t_u_xx",
)


@dataclass(frozen=True)
class ResidualTerms:
    """The six expanded operator terms at one (x, t)."""

    x: float
    t: float
    terms: tuple[float, ...]

    @property
    def total(self) -> float:
        return sum(self.terms)

    @property
    def scale(self) -> float:
        return max(abs(v) for v in self.terms)

    @property
    def relative(self) -> float:
        """``|total| / max|term|``; zero when every term vanishes."""
        scale = self.scale
        return abs(self.total) / scale if scale > 0 else 0.0

    def as_dict(self) -> dict[str, float]:
        return dict(zip(TERM_NAMES, self.terms))


def residual_terms(
    config: BeamConfig, u: DisplacementField, x: float, t: float
) -> ResidualTerms:
    """Evaluate every expanded term of the operator at ``(x, t)``.

    Raises:
        ParameterError: ``x`` outside the configured domain.
        EvaluationError: A coefficient or the field is singular at ``x``.
    """
    config.require_in_domain(x)
    try:
        ei = config.ei.jet(x)
        m = config.m.jet(x)
        tension = config.t.jet(x)
        uj = u.jet(x, t)
    except EvaluationError as exc:
        raise EvaluationError(f"residual at (x={x!r}, t={t!r}): {exc}") from exc

    u_x, u_xx, u_xxx, u_xxxx = (uj.slot(i) for i in (1, 2, 3, 4))
    terms = (
        ei.value * u_xxxx,
        2.0 * ei.slot(1) * u_xxx,
        ei.slot(2) * u_xx,
        m.value * uj.slot(0, 2),
        -tension.slot(1) * u_x,
        -tension.value * u_xx,
    )
    return ResidualTerms(x=float(x), t=float(t), terms=terms)


def residual(config: BeamConfig, u: DisplacementField, x: float, t: float) -> float:
    """Left side of the beam equation at ``(x, t)``; zero iff ``u`` solves it there."""
    return residual_terms(config, u, x, t).total


def relative_residual(
    config: BeamConfig, u: DisplacementField, x: float, t: float
) -> float:
    return residual_terms(config, u, x, t).relative


def max_relative_residual(
    config: BeamConfig,
    u: DisplacementField,
    points: Iterable[tuple[float, float]],
) -> tuple[float, tuple[float, float] | None]:
    """Worst relative residual over ``points`` and where it occurs."""
    worst, where = 0.0, None
    count = 0
    for x, t in points:
        value = relative_residual(config, u, x, t)
        count += 1
        if where is None or value > worst:
            worst, where = value, (x, t)
    logger.debug("Residual sweep over %d points: max relative %.3e", count, worst)
    return worst, where


def grid_points(
    domain: tuple[float, float], t_max: float, nx: int = 10, nt: int = 10
) -> list[tuple[float, float]]:
    """A tensor grid of ``nx * nt`` (x, t) points spanning the domain."""
    x_min, length = domain
    xs = [x_min + (length - x_min) * i / (nx - 1) for i in range(nx)]
    ts = [t_max * j / (nt - 1) for j in range(nt)]
    return [(x, t) for x in xs for t in ts]
