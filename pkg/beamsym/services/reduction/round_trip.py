"""Rebuild a catalog solution from its generator alone."""

from __future__ import annotations

from dataclasses import dataclass

from beamsym.core.config import settings
from beamsym.core.errors import UnsupportedFormError
from beamsym.core.logging import get_logger
from beamsym.services.beam_model.coefficients import CoefficientFn
from beamsym.services.beam_model.residual import max_relative_residual
from beamsym.services.beam_model.solution import ClosedFormSolution, TemporalFactor
from beamsym.services.catalog.bundle import CaseBundle
from beamsym.services.reduction.profile import invariant_profile_fn
from beamsym.services.reduction.separation import (
    SeparationReport,
    separation_constant,
    separation_grid,
)
from beamsym.services.reduction.temporal import assemble_solution, temporal_solve

logger = get_logger(__name__)


@dataclass
class RoundTripResult:
    """Outcome of profile, separation and temporal solve on one bundle.

    ``solution`` and ``max_residual`` are None when the profile does not
    separate the equation.
    """

    case: str
    profile: CoefficientFn
    report: SeparationReport
    temporal: TemporalFactor | None = None
    solution: ClosedFormSolution | None = None
    max_residual: float | None = None
    ratio_spread: float | None = None

    @property
    def separable(self) -> bool:
        return self.report.constant


def residual_grid(
    domain: tuple[float, float], t_max: float, nx: int = 10, nt: int = 10
) -> list[tuple[float, float]]:
    """Cell midpoints in x (profiles may be singular at the ends) times a t grid."""
    ts = [t_max * j / (nt - 1) for j in range(nt)]
    return [(x, t) for x in separation_grid(domain, nx) for t in ts]


def profile_ratio_spread(
    rebuilt: CoefficientFn, catalog: CoefficientFn, xs: list[float]
) -> float:
    """Largest relative deviation of ``rebuilt / catalog`` from its value at the first sample.

    Zero when the two profiles are proportional on ``xs``.  Points where the
    catalog profile vanishes are skipped.
    """
    ratios = []
    for xv in xs:
        denominator = catalog.value(xv)
        if denominator != 0.0:
            ratios.append(rebuilt.value(xv) / denominator)
    if not ratios or ratios[0] == 0.0:
        return float("inf")
    reference = ratios[0]
    return max(abs(r - reference) for r in ratios) / abs(reference)


def round_trip(
    bundle: CaseBundle,
    x0: float | None = None,
    t_max: float = settings.certify_t_max,
) -> RoundTripResult:
    """Reduce ``bundle`` by its own generator and check the rebuilt solution.

    The u-coefficient of eta, ``f1 + omega/4``, drives the characteristic
    equation.  Initial data come from the bundle's temporal factor at t = 0,
    so the rebuilt solution differs from the catalog one only by the
    profile normalization.

    Raises:
        UnsupportedFormError: The profile separates but is not proportional
            to the catalog profile, so the catalog solution is not an
            invariant solution of the bundle's generator.
    """
    config = bundle.config
    a = bundle.inf.u_coefficient()
    if x0 is None:
        x0 = 0.5 * (config.x_min + config.length)
    profile = invariant_profile_fn(bundle.inf.xi, a, x0, config.domain)
    report = separation_constant(config, profile)
    result = RoundTripResult(case=bundle.name, profile=profile, report=report)
    if not report.constant:
        logger.info("Case %s: profile %s does not separate", bundle.name, profile.render())
        return result

    result.ratio_spread = profile_ratio_spread(
        profile, bundle.solution.profile, separation_grid(config.domain)
    )
    if result.ratio_spread > settings.profile_match_tolerance:
        raise UnsupportedFormError(
            f"case {bundle.name}: the generator reduces to the profile {profile.render()}, "
            f"which is not proportional to the catalog profile "
            f"{bundle.solution.profile.render()} (ratio spread {result.ratio_spread:.3g}); "
            "the catalog solution cannot be rebuilt from this generator"
        )

    f0, f0dot, _ = bundle.solution.temporal.derivatives(0.0)
    result.temporal = temporal_solve(report.s, f0, f0dot)
    result.solution = assemble_solution(profile, result.temporal, config.domain)
    result.max_residual, _ = max_relative_residual(
        config, result.solution, residual_grid(config.domain, t_max)
    )
    logger.info(
        "Case %s round trip: S=%.6g, max relative residual %.3e",
        bundle.name,
        report.s,
        result.max_residual,
    )
    return result
