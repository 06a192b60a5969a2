"""The eleven determining equations evaluated at one point (x, t, u).

Each equation is kept as its list of additive terms so that it can be
judged relative to its largest term.  Coefficient derivatives come from
jets of EI, m, T, xi and f1; derivatives of eta follow from its affine
form, e.g. eta_tt = 0, eta_x = f1' u and eta_xxxx = f1'''' u.

R1..R4 (tau_x, tau_u, xi_t, xi_u) and R11 (eta_uu) vanish by the shape of
``Infinitesimals``; R10 is assembled from the tau and eta jets and
vanishes for the same reason.  R5..R9 carry the information.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

from beamsym.core.config import settings
from beamsym.core.errors import EvaluationError
from beamsym.core.logging import get_logger
from beamsym.services.beam_model.beam import BeamConfig
from beamsym.services.symmetry.infinitesimals import Infinitesimals

logger = get_logger(__name__)

LABELS = tuple(f"R{k}" for k in range(1, 12))
STRUCTURAL = ("R1", "R2", "R3", "R4")


@dataclass(frozen=True)
class EquationResidual:
    """One determining equation as a list of additive terms."""

    label: str
    terms: tuple[float, ...]

    @property
    def value(self) -> float:
        return math.fsum(self.terms)

    @property
    def scale(self) -> float:
        return max((abs(v) for v in self.terms), default=0.0)

    @property
    def relative(self) -> float:
        scale = self.scale
        return abs(self.value) / scale if scale > 0 else 0.0

    def passes(self, tol: float) -> bool:
        return self.relative <= tol


@dataclass(frozen=True)
class DeterminingReport:
    x: float
    t: float
    u: float
    residuals: Mapping[str, EquationResidual]
    tolerance: float = field(default=settings.determining_tolerance)

    def __getitem__(self, label: str) -> EquationResidual:
        return self.residuals[label]

    def verdicts(self) -> dict[str, bool]:
        return {label: r.passes(self.tolerance) for label, r in self.residuals.items()}

    def failing(self) -> list[str]:
        return [label for label, ok in self.verdicts().items() if not ok]


@dataclass(frozen=True)
class _Point:
    """Pure-x derivative lists of every coefficient at one x."""

    e: list[float]
    m: list[float]
    t: list[float]
    xi: list[float]
    f1: list[float]
    xi_t: float
    xi_tt: float
    tau: list[float]
    tau_x: list[float]
    a_t: float


def _equations(p: _Point, u: float) -> dict[str, Callable[[], tuple[float, ...]]]:
    E, dE, ddE, dddE = p.e[0], p.e[1], p.e[2], p.e[3]
    m, dm = p.m[0], p.m[1]
    T, dT, ddT = p.t[0], p.t[1], p.t[2]
    xi, dxi, ddxi, dddxi, ddddxi = p.xi
    _, df1, ddf1, dddf1, ddddf1 = p.f1
    tau_t, tau_tt = p.tau[1], p.tau[2]
    _, tau_x, tau_xx, tau_xxx, tau_xxxx = p.tau_x
    eta_tt = 0.0

    def r6() -> tuple[float, ...]:
        return (
            -2.0 * xi * dE * dE / E,
            2.0 * xi * ddE,
            2.0 * dE * dxi,
            4.0 * E * df1,
            -6.0 * E * ddxi,
        )

    def r7() -> tuple[float, ...]:
        return (
            T * xi * dE / E,
            -xi * dT,
            -xi * dE * ddE / E,
            xi * dddE,
            -2.0 * T * dxi,
            2.0 * ddE * dxi,
            6.0 * dE * df1,
            6.0 * dE * ddxi,
            6.0 * E * ddf1,
            4.0 * E * dddxi,
        )

    def r8() -> tuple[float, ...]:
        return (
            dT * xi * dE / E,
            -ddT * xi,
            -m * p.xi_tt,
            -3.0 * dT * dxi,
            -2.0 * T * df1,
            2.0 * ddE * df1,
            T * ddxi,
            -E * ddxi,
            6.0 * dE * ddf1,
            -2.0 * dE * dddxi,
            4.0 * E * dddf1,
            E * ddddxi,
        )

    def r9() -> tuple[float, ...]:
        return (-m * xi * dE / E, xi * dm, -2.0 * m * tau_t, 4.0 * dxi)

    return {
        "R1": lambda: (tau_x,),
        "R2": lambda: (0.0,),
        "R3": lambda: (p.xi_t,),
        "R4": lambda: (0.0,),
        "R5": lambda: (
            m * eta_tt,
            -dT * df1 * u,
            -T * ddf1 * u,
            ddE * ddf1 * u,
            2.0 * dE * dddf1 * u,
            E * ddddf1 * u,
        ),
        "R6": r6,
        "R7": r7,
        "R8": r8,
        "R9": r9,
        "R10": lambda: (
            2.0 * m * p.a_t,
            -m * tau_tt,
            dT * tau_x,
            T * tau_xx,
            -ddE * tau_xx,
            -2.0 * dE * tau_xxx,
            -E * tau_xxxx,
        ),
        "R11": lambda: (0.0,),
    }


def determining_residuals(
    config: BeamConfig,
    inf: Infinitesimals,
    x: float,
    t: float,
    u: float,
    tol: float | None = None,
) -> DeterminingReport:
    """Evaluate R1..R11 at ``(x, t, u)``.

    Args:
        config: Beam coefficients.
        inf: Candidate generator.
        x: Spatial point inside the domain.
        t: Time.
        u: Value of the dependent variable, treated as a free coordinate.
        tol: Pass threshold on the relative residual.

    Returns:
        A ``DeterminingReport`` with every equation's terms.

    Raises:
        ParameterError: ``x`` outside the domain.
        EvaluationError: A coefficient is singular at the point; the message
            names the equation.
    """
    config.require_in_domain(x)
    tol = settings.determining_tolerance if tol is None else tol
    try:
        xi_jet = inf.xi.jet(x)
        tau_jet = inf.tau_jet(t)
        point = _Point(
            e=config.ei.jet(x).x_derivatives(),
            m=config.m.jet(x).x_derivatives(),
            t=config.t.jet(x).x_derivatives(),
            xi=xi_jet.x_derivatives(),
            f1=inf.f1.jet(x).x_derivatives(),
            xi_t=xi_jet.slot(0, 1),
            xi_tt=xi_jet.slot(0, 2),
            tau=tau_jet.t_derivatives(),
            tau_x=tau_jet.x_derivatives(),
            a_t=inf.u_coefficient_jet(x).slot(0, 1),
        )
    except EvaluationError as exc:
        raise EvaluationError(f"determining equations at x={x!r}: {exc}") from exc

    residuals: dict[str, EquationResidual] = {}
    for label, build in _equations(point, float(u)).items():
        try:
            terms = build()
        except ZeroDivisionError as exc:
            raise EvaluationError(
                f"{label} at (x={x!r}, t={t!r}, u={u!r}): division by EI = 0"
            ) from exc
        if not all(math.isfinite(v) for v in terms):
            raise EvaluationError(f"{label} at (x={x!r}, t={t!r}, u={u!r}) is not finite")
        residuals[label] = EquationResidual(label, tuple(float(v) for v in terms))
    return DeterminingReport(float(x), float(t), float(u), residuals, tol)
