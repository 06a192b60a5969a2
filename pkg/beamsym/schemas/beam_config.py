"""Pydantic schemas for the BeamConfig TOML document."""

from __future__ import annotations

from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class ConstantSpec(BaseModel):
    """``value`` everywhere."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["constant"]
    value: float


class ExponentialSpec(BaseModel):
    """``scale * exp(rate * x)``."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["exponential"]
    scale: float = 1.0
    rate: float


class AffinePowerSpec(BaseModel):
    """``scale * (a0 + a1*x)**n``."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["affine_power"]
    scale: float = 1.0
    a0: float
    a1: float
    n: float


class PolynomialSpec(BaseModel):
    """``sum_k coeffs[k] * x**k``, ascending powers."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["polynomial"]
    coeffs: list[float] = Field(..., min_length=1)


class ExprSpec(BaseModel):
    """A formula in ``x``; every other key is a named parameter value."""

    model_config = ConfigDict(extra="allow")

    kind: Literal["expr"]
    expr: str = Field(..., min_length=1)

    @model_validator(mode="after")
    def _params_are_numbers(self) -> "ExprSpec":
        for name, value in (self.model_extra or {}).items():
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ValueError(f"parameter {name!r} must be a number, got {value!r}")
            if name == "x":
                raise ValueError("'x' is the coordinate and cannot be a parameter")
        return self

    @property
    def params(self) -> dict[str, float]:
        return {name: float(value) for name, value in (self.model_extra or {}).items()}


CoefficientSpec = Annotated[
    Union[ConstantSpec, ExponentialSpec, AffinePowerSpec, PolynomialSpec, ExprSpec],
    Field(discriminator="kind"),
]


class BeamConfigDocument(BaseModel):
    """Top-level keys of a BeamConfig file."""

    model_config = ConfigDict(extra="ignore")

    ei: CoefficientSpec
    m: CoefficientSpec
    t: CoefficientSpec
    domain: tuple[float, float]
    label: str = ""

    @field_validator("domain")
    @classmethod
    def _ordered(cls, value: tuple[float, float]) -> tuple[float, float]:
        if not value[0] < value[1]:
            raise ValueError(f"domain needs x_min < l, got {list(value)}")
        return value


class SolutionDescriptor(BaseModel):
    """The ``[solution]`` table of an exported bundle."""

    profile: str
    temporal_kind: Literal["hyperbolic", "affine", "trigonometric"]
    rate: float = 0.0
    a1: float
    a2: float
    offset_slope: float = 0.0
    offset_const: float = 0.0
    separation_constant: float
    formula: str


class InfinitesimalsDescriptor(BaseModel):
    """The ``[infinitesimals]`` table of an exported bundle."""

    xi: str
    omega: float
    t0: float
    f1: str
    d1: float
    d2: float
    generator: str
    certified: list[str]
    notes: Optional[str] = None
