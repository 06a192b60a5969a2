"""A closed-form family instance: coefficients, generator and solution."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

from beamsym.schemas.beam_config import InfinitesimalsDescriptor, SolutionDescriptor
from beamsym.services.beam_model.beam import BeamConfig
from beamsym.services.beam_model.serialization import dump_config, toml_table
from beamsym.services.beam_model.solution import ClosedFormSolution
from beamsym.services.symmetry.infinitesimals import Infinitesimals


@dataclass(frozen=True)
class CaseBundle:
    """Everything one catalog constructor produces.

    Attributes:
        name: Registry name (``a1``, ``a2``, ``b``, ``c``, ``bvp``).
        config: Beam coefficients on the case domain.
        inf: Symmetry generator of the family.
        solution: Closed-form displacement field.
        params: Parameter values used to build the bundle.
        certified: Determining equations expected to vanish (golden data).
        metadata: Derived quantities (separation constant, m1/m2, ...).
        notes: Human-readable remarks (regime changes, compressive load).
    """

    name: str
    config: BeamConfig
    inf: Infinitesimals
    solution: ClosedFormSolution
    params: Mapping[str, float]
    certified: tuple[str, ...] = ()
    metadata: Mapping[str, Any] = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    def solution_descriptor(self) -> SolutionDescriptor:
        temporal = self.solution.temporal
        return SolutionDescriptor(
            profile=self.solution.profile.render(),
            temporal_kind=temporal.kind.value,
            rate=temporal.rate,
            a1=temporal.a1,
            a2=temporal.a2,
            offset_slope=self.solution.offset_slope,
            offset_const=self.solution.offset_const,
            separation_constant=temporal.separation_constant,
            formula=self.solution.render(),
        )

    def infinitesimals_descriptor(self) -> InfinitesimalsDescriptor:
        return InfinitesimalsDescriptor(
            xi=self.inf.xi.render(),
            omega=self.inf.omega,
            t0=self.inf.t0,
            f1=self.inf.f1.render(),
            d1=self.inf.d1,
            d2=self.inf.d2,
            generator=self.inf.generator(),
            certified=list(self.certified),
        )

    def formulas(self) -> list[str]:
        return [
            f"EI = {self.config.ei.render()}",
            f"m = {self.config.m.render()}",
            f"T = {self.config.t.render()}",
            f"xi = {self.inf.xi.render()}",
            f"u = {self.solution.render()}",
        ]

    def export(self) -> str:
        """TOML text: the BeamConfig keys, then solution and generator tables."""
        header = [f"# case {self.name}"]
        header.extend(f"# {line}" for line in self.formulas())
        header.extend(f"# note: {note}" for note in self.notes)
        parts = [
            "\n".join(header) + "\n",
            dump_config(self.config),
            toml_table("params", dict(self.params)),
            toml_table("metadata", {k: v for k, v in self.metadata.items() if _scalar(v)}),
            toml_table("solution", self.solution_descriptor().model_dump()),
            toml_table("infinitesimals", self.infinitesimals_descriptor().model_dump(exclude_none=True)),
        ]
        return "\n".join(parts)


def _scalar(value: Any) -> bool:
    return isinstance(value, (bool, int, float, str))
