"""``verify`` and ``reduce``: residual, determining equations and round trip."""

from __future__ import annotations

from beamsym.cli.commands.common import FAIL, PASS, CommandResult, bundle_for, verdict
from beamsym.core.config import settings
from beamsym.core.formatting import format_float
from beamsym.schemas.run_spec import RunSpec
from beamsym.services.beam_model import grid_points, max_relative_residual, residual_terms
from beamsym.services.reduction import round_trip
from beamsym.services.symmetry import certify


def run_verify(spec: RunSpec) -> CommandResult:
    """PASS iff the closed-form residual and every certified equation pass."""
    bundle = bundle_for(spec)
    residual_tol = spec.tol or settings.residual_tolerance
    determining_tol = spec.tol or settings.determining_tolerance

    points = grid_points(bundle.config.domain, settings.certify_t_max)
    worst, where = max_relative_residual(bundle.config, bundle.solution, points)
    residual_ok = worst <= residual_tol
    lines = [
        f"# case {bundle.name}: {bundle.config.label}",
        f"residual max_relative={format_float(worst)} tol={format_float(residual_tol)} "
        f"{verdict(residual_ok)}",
    ]
    if not residual_ok and where is not None:
        terms = residual_terms(bundle.config, bundle.solution, *where)
        lines.append(f"# worst point x={format_float(where[0])} t={format_float(where[1])}")
        lines.extend(f"#   {name} = {format_float(value)}" for name, value in terms.as_dict().items())

    report = certify(
        bundle.config,
        bundle.inf,
        n_samples=spec.samples,
        tol=determining_tol,
        seed=spec.seed,
        certified=bundle.certified,
    )
    lines.append(report.to_csv().rstrip("\n"))
    certified_ok = report.certified_ok()
    lines.append(f"certified {','.join(bundle.certified)} {verdict(certified_ok)}")

    ok = residual_ok and certified_ok
    lines.append(verdict(ok))
    return CommandResult("\n".join(lines) + "\n", PASS if ok else FAIL)


def run_reduce(spec: RunSpec) -> CommandResult:
    """Rebuild the solution from the generator; PASS iff it separates and solves."""
    bundle = bundle_for(spec)
    result = round_trip(bundle)
    tol = spec.tol or settings.residual_tolerance
    lines = [
        f"# case {bundle.name}: profile = {result.profile.render()}",
        result.report.to_csv().rstrip("\n"),
    ]
    if not result.separable:
        lines.append("separable=false")
        lines.append(verdict(False))
        return CommandResult("\n".join(lines) + "\n", FAIL)

    ok = result.max_residual is not None and result.max_residual <= tol
    lines.extend(
        [
            f"separable=true S={format_float(result.report.s)}",
            f"temporal {result.temporal.kind.value}: F(t) = {result.temporal.render()}",
            f"residual max_relative={format_float(result.max_residual)} tol={format_float(tol)}",
            verdict(ok),
        ]
    )
    return CommandResult("\n".join(lines) + "\n", PASS if ok else FAIL)
