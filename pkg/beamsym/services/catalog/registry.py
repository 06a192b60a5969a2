"""Case names, default parameters and parameter validation for the CLI."""

from __future__ import annotations

import inspect
from dataclasses import dataclass
from typing import Callable, Mapping

from beamsym.core.errors import ParameterError
from beamsym.core.logging import get_logger
from beamsym.services.catalog.bundle import CaseBundle
from beamsym.services.catalog.bvp import bvp_case
from beamsym.services.catalog.cases import case_a1, case_a2, case_b, case_c

logger = get_logger(__name__)


@dataclass(frozen=True)
class CaseSpec:
    name: str
    builder: Callable[..., CaseBundle]
    description: str

    @property
    def defaults(self) -> dict[str, float]:
        """Positional parameters of the builder with their default values."""
        signature = inspect.signature(self.builder)
        return {
            name: float(param.default)
            for name, param in signature.parameters.items()
            if param.kind is inspect.Parameter.POSITIONAL_OR_KEYWORD
        }

    @property
    def param_names(self) -> tuple[str, ...]:
        return tuple(self.defaults)


CASES: dict[str, CaseSpec] = {
    spec.name: spec
    for spec in (
        CaseSpec("a1", case_a1, "EI = k^3 x^6/(8 f0^3), u = exp(-2/x) F(t)"),
        CaseSpec("a2", case_a2, "EI = a1 exp(a0 x), compressive T, u = exp(x/r0)(A1 + A2 t)"),
        CaseSpec("b", case_b, "EI = a1 exp(-v x), u = exp(2 v x)(A1 + A2 t)"),
        CaseSpec("c", case_c, "EI = (a0 + a1 x)^n, u = 2 t + G(x)"),
        CaseSpec("bvp", bvp_case, "cantilever with quadratic mass, u = P(x)^2 cos(nu t)"),
    )
}


def get_case(name: str) -> CaseSpec:
    try:
        return CASES[name]
    except KeyError:
        raise ParameterError(
            f"unknown case {name!r}; expected one of {', '.join(CASES)}"
        ) from None


def resolve_params(name: str, overrides: Mapping[str, float]) -> dict[str, float]:
    """Defaults of ``name`` updated with ``overrides``; unknown names are rejected."""
    spec = get_case(name)
    params = spec.defaults
    unknown = sorted(set(overrides) - set(params))
    if unknown:
        raise ParameterError(
            f"unknown parameter(s) {', '.join(unknown)} for case {name!r}; "
            f"expected {', '.join(spec.param_names)}"
        )
    params.update({key: float(value) for key, value in overrides.items()})
    return params


def build_case(name: str, overrides: Mapping[str, float] | None = None) -> CaseBundle:
    """Construct a bundle by registry name."""
    params = resolve_params(name, overrides or {})
    bundle = get_case(name).builder(**params)
    logger.info("Built case %s with %s", name, ", ".join(f"{k}={v:g}" for k, v in params.items()))
    return bundle
