"""Access to the frozen certified-equation manifest."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from pydantic import ValidationError

from beamsym.core.errors import ParameterError
from beamsym.schemas.golden import GoldenCase, GoldenManifest

MANIFEST = "certified_equations.json"


@lru_cache(maxsize=1)
def load_manifest() -> GoldenManifest:
    text = resources.files("beamsym").joinpath("data", MANIFEST).read_text(encoding="utf-8")
    try:
        return GoldenManifest.model_validate(json.loads(text))
    except (ValidationError, json.JSONDecodeError) as exc:
        raise ParameterError(f"corrupt golden manifest {MANIFEST}: {exc}") from exc


def golden_case(name: str) -> GoldenCase:
    manifest = load_manifest()
    if name not in manifest.cases:
        raise ParameterError(f"no golden data for case {name!r}")
    return manifest.cases[name]


def certified_equations(name: str) -> tuple[str, ...]:
    return tuple(golden_case(name).certified)
