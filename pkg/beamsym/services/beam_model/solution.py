"""Closed-form displacement fields u(x, t) = phi(x) F(t) + c t + d."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Protocol, Sequence

from beamsym.services.beam_model.coefficients import CoefficientFn, format_number
from beamsym.services.jets import Jet


class TemporalKind(str, Enum):
    HYPERBOLIC = "hyperbolic"
    AFFINE = "affine"
    TRIGONOMETRIC = "trigonometric"


@dataclass(frozen=True)
class TemporalFactor:
    """One of ``A1 e^(rate t) + A2 e^(-rate t)``, ``A1 + A2 t`` or
    ``A1 cos(rate t) + A2 sin(rate t)``.
    """

    kind: TemporalKind
    a1: float
    a2: float
    rate: float = 0.0

    @classmethod
    def hyperbolic(cls, rate: float, a1: float, a2: float) -> "TemporalFactor":
        return cls(TemporalKind.HYPERBOLIC, float(a1), float(a2), float(rate))

    @classmethod
    def affine(cls, a1: float, a2: float = 0.0) -> "TemporalFactor":
        return cls(TemporalKind.AFFINE, float(a1), float(a2), 0.0)

    @classmethod
    def trigonometric(cls, rate: float, a1: float, a2: float) -> "TemporalFactor":
        return cls(TemporalKind.TRIGONOMETRIC, float(a1), float(a2), float(rate))

    @property
    def separation_constant(self) -> float:
        """The S in F'' = S F."""
        if self.kind is TemporalKind.HYPERBOLIC:
            return self.rate**2
        if self.kind is TemporalKind.TRIGONOMETRIC:
            return -(self.rate**2)
        return 0.0

    def derivatives(self, t: float) -> tuple[float, float, float]:
        """``(F, F', F'')`` at ``t``."""
        a1, a2, r = self.a1, self.a2, self.rate
        if self.kind is TemporalKind.HYPERBOLIC:
            ep, em = math.exp(r * t), math.exp(-r * t)
            f = a1 * ep + a2 * em
            return f, r * (a1 * ep - a2 * em), r * r * f
        if self.kind is TemporalKind.TRIGONOMETRIC:
            c, s = math.cos(r * t), math.sin(r * t)
            f = a1 * c + a2 * s
            return f, r * (a2 * c - a1 * s), -r * r * f
        return a1 + a2 * t, a2, 0.0

    def value(self, t: float) -> float:
        return self.derivatives(t)[0]

    def jet(self, t: float) -> Jet:
        return Jet.from_t_derivatives(self.derivatives(t))

    def render(self) -> str:
        a1, a2, r = format_number(self.a1), format_number(self.a2), format_number(self.rate)
        if self.kind is TemporalKind.HYPERBOLIC:
            return f"{a1}*exp({r}*t) + {a2}*exp(-{r}*t)"
        if self.kind is TemporalKind.TRIGONOMETRIC:
            return f"{a1}*cos({r}*t) + {a2}*sin({r}*t)"
        return f"{a1} + {a2}*t"


class DisplacementField(Protocol):
    """Anything evaluable to a full (x, t) jet."""

    def jet(self, x: float, t: float) -> Jet: ...


@dataclass(frozen=True)
class ClosedFormSolution:
    """``u(x, t) = profile(x) * temporal(t) + offset_slope * t + offset_const``."""

    profile: CoefficientFn
    temporal: TemporalFactor
    offset_slope: float = 0.0
    offset_const: float = 0.0
    domain: tuple[float, float] | None = None

    def jet(self, x: float, t: float) -> Jet:
        spatial = self.profile.jet(x)
        u = spatial * self.temporal.jet(t)
        if self.offset_slope or self.offset_const:
            u = u + Jet.t(t) * self.offset_slope + self.offset_const
        return u

    def value(self, x: float, t: float) -> float:
        u = self.profile.value(x) * self.temporal.value(t)
        return u + self.offset_slope * t + self.offset_const

    def render(self) -> str:
        text = f"({self.profile.render()})*({self.temporal.render()})"
        if self.offset_slope:
            text = f"{format_number(self.offset_slope)}*t + {text}"
        if self.offset_const:
            text = f"{text} + {format_number(self.offset_const)}"
        return text


@dataclass(frozen=True)
class LinearCombination:
    """``sum_k weights[k] * fields[k]``."""

    weights: Sequence[float]
    fields: Sequence[DisplacementField]

    def jet(self, x: float, t: float) -> Jet:
        total = Jet.constant(0.0)
        for weight, field in zip(self.weights, self.fields):
            total = total + field.jet(x, t) * weight
        return total
