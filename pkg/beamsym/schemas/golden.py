"""Pydantic schema for the golden certified-equation manifest."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field, field_validator

_LABELS = {f"R{k}" for k in range(1, 12)}


class GoldenCase(BaseModel):
    """Oracle-sweep outcome for one catalog case at its default parameters."""

    params: dict[str, float]
    certified: list[str] = Field(..., description="Equations that vanish identically")
    failing: list[str] = Field(default_factory=list)
    constraints: dict[str, str] = Field(default_factory=dict)
    notes: Optional[str] = None

    @field_validator("certified", "failing")
    @classmethod
    def _known_labels(cls, value: list[str]) -> list[str]:
        unknown = set(value) - _LABELS
        if unknown:
            raise ValueError(f"unknown equation labels {sorted(unknown)}")
        return value


class GoldenManifest(BaseModel):
    generated_by: str
    tolerance: float
    samples: int
    seed: int
    cases: dict[str, GoldenCase]
