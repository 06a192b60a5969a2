"""Beam physical data: stiffness EI(x), mass per length m(x), tension T(x)."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Mapping

from beamsym.core.config import settings
from beamsym.core.errors import EvaluationError, ParameterError
from beamsym.core.logging import get_logger
from beamsym.services.beam_model.coefficients import CoefficientFn, Const, check_positive

logger = get_logger(__name__)

UNITS: Mapping[str, str] = {
    "ei": "force*length^2",
    "m": "mass/length",
    "t": "force",
}

FIELDS = tuple(UNITS)


@dataclass(frozen=True)
class BeamConfig:
    """The coefficient triple of the beam equation on ``[x_min, l]``.

    Attributes:
        ei: Flexural stiffness EI(x).
        m: Mass per unit length m(x).
        t: Axial tension T(x) (negative values are compressive).
        domain: ``(x_min, l)``.
        label: Free-text description used in exports.
    """

    ei: CoefficientFn
    m: CoefficientFn
    t: CoefficientFn = Const(0.0)
    domain: tuple[float, float] = (0.0, 1.0)
    label: str = ""

    def __post_init__(self) -> None:
        x_min, length = (float(v) for v in self.domain)
        object.__setattr__(self, "domain", (x_min, length))
        if not x_min < length:
            raise ParameterError(f"domain needs x_min < l, got [{x_min!r}, {length!r}]")
        # Coefficients singular at x = 0 (1/x, exp(1/x)) force x_min > 0.
        for name in FIELDS:
            try:
                self.field(name).jet(x_min)
            except EvaluationError as exc:
                raise ParameterError(
                    f"{name} is not evaluable at the domain start x_min={x_min!r}: {exc}"
                ) from exc

    @property
    def x_min(self) -> float:
        return self.domain[0]

    @property
    def length(self) -> float:
        return self.domain[1]

    def field(self, name: str) -> CoefficientFn:
        if name not in UNITS:
            raise ParameterError(f"unknown coefficient {name!r}; expected one of {FIELDS}")
        return getattr(self, name)

    def contains(self, x: float, slack: float = 1e-12) -> bool:
        span = self.length - self.x_min
        return self.x_min - slack * span <= x <= self.length + slack * span

    def require_in_domain(self, x: float) -> None:
        if not self.contains(x):
            raise ParameterError(
                f"x={x!r} lies outside the domain [{self.x_min!r}, {self.length!r}]"
            )

    def scaled(self, name: str, factor: float) -> "BeamConfig":
        """Copy with one coefficient multiplied by ``factor``."""
        scaled = self.field(name) * float(factor)
        label = f"{self.label} ({name} x{factor:g})".strip()
        return replace(self, **{name: scaled}, label=label)

    def with_domain(self, domain: tuple[float, float]) -> "BeamConfig":
        return replace(self, domain=domain)

    def check_positivity(self, samples: int = settings.positivity_samples) -> None:
        """Require EI > 0 and m > 0 at ``samples`` cell midpoints.

        Raises:
            ParameterError: Naming the coefficient and the first failing point.
        """
        for name in ("ei", "m"):
            bad = check_positive(self.field(name), self.domain, samples)
            if bad:
                raise ParameterError(
                    f"{name} must be positive on the domain; fails at {len(bad)} of "
                    f"{samples} sample points, first x={bad[0]!r}"
                )
        logger.debug("Positivity check passed for %s", self.label or "beam")
