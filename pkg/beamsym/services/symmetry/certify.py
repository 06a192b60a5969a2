"""Sweep the determining equations over a low-discrepancy sample."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from scipy.stats import qmc

from beamsym.core.config import settings
from beamsym.core.errors import ParameterError
from beamsym.core.formatting import to_csv
from beamsym.core.logging import get_logger
from beamsym.services.beam_model.beam import BeamConfig
from beamsym.services.symmetry.determining import (
    LABELS,
    DeterminingReport,
    determining_residuals,
)
from beamsym.services.symmetry.infinitesimals import Infinitesimals

logger = get_logger(__name__)

# u values cycled through the sample: exercise the affine dependence on u.
U_CYCLE = (0.0, 1.0, -1.0, 10.0, -10.0)


@dataclass
class EquationSummary:
    label: str
    max_residual: float = 0.0
    max_absolute: float = 0.0
    worst_point: tuple[float, float, float] | None = None
    passed: bool = True


@dataclass
class CertifyReport:
    """Per-equation worst relative residual over the sample.

    Attributes:
        summaries: Label -> summary, in R1..R11 order.
        n_samples: Number of (x, t, u) points evaluated.
        tolerance: Pass threshold on the relative residual.
        seed: Seed of the scrambled Halton sequence.
        certified: Labels expected to pass (golden list), if known.
    """

    summaries: dict[str, EquationSummary]
    n_samples: int
    tolerance: float
    seed: int
    certified: tuple[str, ...] | None = None
    points: list[tuple[float, float, float]] = field(default_factory=list, repr=False)

    @property
    def passed_labels(self) -> list[str]:
        return [s.label for s in self.summaries.values() if s.passed]

    @property
    def failed_labels(self) -> list[str]:
        return [s.label for s in self.summaries.values() if not s.passed]

    def certified_ok(self) -> bool:
        """Every golden-listed equation passes (all eleven when no list is set)."""
        labels = self.certified if self.certified is not None else LABELS
        return all(self.summaries[label].passed for label in labels)

    def matches_golden(self) -> bool:
        """The passing set is exactly the golden list."""
        if self.certified is None:
            return False
        return set(self.passed_labels) == set(self.certified)

    def to_csv(self) -> str:
        rows = []
        for s in self.summaries.values():
            row: list[object] = [s.label, s.max_residual, s.passed]
            if self.certified is not None:
                row.append(s.label in self.certified)
            rows.append(row)
        header = ["equation", "max_residual", "pass"]
        if self.certified is not None:
            header.append("certified")
        return to_csv(header, rows)


def sample_points(
    domain: tuple[float, float],
    n_samples: int,
    t_max: float = settings.certify_t_max,
    seed: int = settings.sample_seed,
) -> list[tuple[float, float, float]]:
    """Deterministic (x, t, u) points: scrambled Halton in (x, t), u cycled."""
    if n_samples < 1:
        raise ParameterError(f"certify needs at least one sample, got {n_samples}")
    x_min, length = domain
    unit = qmc.Halton(d=2, scramble=True, seed=seed).random(n_samples)
    xs = x_min + (length - x_min) * unit[:, 0]
    ts = t_max * unit[:, 1]
    return [
        (float(x), float(t), U_CYCLE[k % len(U_CYCLE)])
        for k, (x, t) in enumerate(zip(xs, ts))
    ]


def certify(
    config: BeamConfig,
    inf: Infinitesimals,
    n_samples: int = settings.certify_samples,
    tol: float = settings.determining_tolerance,
    seed: int = settings.sample_seed,
    t_max: float = settings.certify_t_max,
    certified: Sequence[str] | None = None,
) -> CertifyReport:
    """Evaluate every determining equation on ``n_samples`` points.

    Args:
        config: Beam coefficients.
        inf: Candidate generator.
        n_samples: Number of sample points (at least 1).
        tol: Pass threshold on the relative residual.
        seed: Seed for the sample sequence.
        t_max: Upper end of the sampled time interval.
        certified: Golden list of labels expected to pass.

    Returns:
        A ``CertifyReport`` with each equation's worst relative residual.
    """
    points = sample_points(config.domain, n_samples, t_max, seed)
    summaries = {label: EquationSummary(label) for label in LABELS}
    for x, t, u in points:
        report = determining_residuals(config, inf, x, t, u, tol)
        _accumulate(summaries, report)
    for summary in summaries.values():
        summary.passed = summary.max_residual <= tol

    result = CertifyReport(
        summaries=summaries,
        n_samples=len(points),
        tolerance=tol,
        seed=seed,
        certified=tuple(certified) if certified is not None else None,
        points=points,
    )
    logger.info(
        "Certified %s over %d samples: pass=%s fail=%s",
        config.label or "beam",
        len(points),
        ",".join(result.passed_labels),
        ",".join(result.failed_labels) or "-",
    )
    return result


def _accumulate(summaries: dict[str, EquationSummary], report: DeterminingReport) -> None:
    for label, residual in report.residuals.items():
        summary = summaries[label]
        summary.max_absolute = max(summary.max_absolute, abs(residual.value))
        if summary.worst_point is None or residual.relative > summary.max_residual:
            summary.max_residual = residual.relative
            summary.worst_point = (report.x, report.t, report.u)


def u_affinity_defects(
    config: BeamConfig,
    inf: Infinitesimals,
    x: float,
    t: float,
    u_values: Iterable[float] = (0.0, 1.0, 10.0),
) -> dict[str, float]:
    """``|R(10) - (10 R(1) - 9 R(0))|`` per equation at ``(x, t)``.

    Each residual is affine in u, so every defect is rounding noise.
    """
    u0, u1, u2 = u_values
    r0, r1, r2 = (determining_residuals(config, inf, x, t, u) for u in (u0, u1, u2))
    weight = (u2 - u0) / (u1 - u0)
    return {
        label: float(
            abs(r2[label].value - (weight * r1[label].value + (1.0 - weight) * r0[label].value))
        )
        for label in LABELS
    }

