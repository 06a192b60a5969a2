"""BeamConfig <-> TOML text.

Documents look like::

    label = "case b"
    domain = [0.0, 1.0]
    ei = { kind = "expr", expr = "a1*exp(-v*x)", a1 = 1.0, v = 1.0 }
    m = { kind = "polynomial", coeffs = [1.0, -0.5] }
    t = { kind = "constant", value = 2.0 }

Reading goes through tomllib and the pydantic document schema; writing is
done here because only the small inline-table subset is ever emitted.
"""

from __future__ import annotations

import json

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Any, Iterable, Mapping

from pydantic import ValidationError

from beamsym.core.errors import ParameterError, UnsupportedFormError
from beamsym.core.logging import get_logger
from beamsym.schemas.beam_config import (
    AffinePowerSpec,
    BeamConfigDocument,
    ConstantSpec,
    ExponentialSpec,
    ExprSpec,
    PolynomialSpec,
)
from beamsym.services.beam_model.beam import FIELDS, BeamConfig
from beamsym.services.beam_model.coefficients import (
    CoefficientFn,
    Const,
    Polynomial,
    TailIntegral,
    affine,
    coordinate,
    exp,
    parse_expression,
)

logger = get_logger(__name__)


# ── Writing ──────────────────────────────────────────────────────────


def toml_value(value: Any) -> str:
    """Render a scalar, string or list as a TOML value."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float)):
        return repr(float(value))
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(toml_value(v) for v in value) + "]"
    raise TypeError(f"cannot write {type(value).__name__} as TOML")


def inline_table(items: Mapping[str, Any]) -> str:
    return "{ " + ", ".join(f"{key} = {toml_value(val)}" for key, val in items.items()) + " }"


def toml_table(name: str, items: Mapping[str, Any]) -> str:
    lines = [f"[{name}]"]
    lines.extend(f"{key} = {toml_value(val)}" for key, val in items.items())
    return "\n".join(lines) + "\n"


def _contains_tail_integral(fn: CoefficientFn) -> bool:
    return isinstance(fn, TailIntegral) or any(
        _contains_tail_integral(child) for child in fn.children()
    )


def coefficient_items(fn: CoefficientFn) -> dict[str, Any]:
    """The inline-table entries describing ``fn``."""
    if _contains_tail_integral(fn):
        raise UnsupportedFormError(
            f"quadrature-backed coefficient {fn.render()} has no text form"
        )
    if isinstance(fn, Const):
        return {"kind": "constant", "value": fn.number}
    if isinstance(fn, Polynomial):
        return {"kind": "polynomial", "coeffs": list(fn.coeffs)}
    return {"kind": "expr", "expr": fn.render(), **fn.parameters()}


def dump_config(config: BeamConfig) -> str:
    lines = [
        f"label = {toml_value(config.label)}",
        f"domain = {toml_value(list(config.domain))}",
    ]
    lines.extend(f"{name} = {inline_table(coefficient_items(config.field(name)))}" for name in FIELDS)
    return "\n".join(lines) + "\n"


def write_config(config: BeamConfig, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(dump_config(config), encoding="utf-8")
    logger.info("Wrote beam config %s to %s", config.label or "(unlabelled)", path)
    return path


# ── Reading ──────────────────────────────────────────────────────────


def build_coefficient(spec: Any) -> CoefficientFn:
    """Coefficient tree for one validated coefficient spec."""
    if isinstance(spec, ConstantSpec):
        return Const(spec.value)
    if isinstance(spec, ExponentialSpec):
        return spec.scale * exp(spec.rate * coordinate())
    if isinstance(spec, AffinePowerSpec):
        return spec.scale * affine(spec.a0, spec.a1) ** spec.n
    if isinstance(spec, PolynomialSpec):
        return Polynomial(tuple(spec.coeffs))
    if isinstance(spec, ExprSpec):
        return parse_expression(spec.expr, spec.params)
    raise ParameterError(f"unknown coefficient spec {spec!r}")


def config_from_document(document: Mapping[str, Any]) -> BeamConfig:
    try:
        doc = BeamConfigDocument.model_validate(document)
    except ValidationError as exc:
        raise ParameterError(f"invalid beam config: {_summarize(exc.errors())}") from exc
    return BeamConfig(
        ei=build_coefficient(doc.ei),
        m=build_coefficient(doc.m),
        t=build_coefficient(doc.t),
        domain=doc.domain,
        label=doc.label,
    )


def load_config(text: str) -> BeamConfig:
    """Parse a BeamConfig TOML document.

    Raises:
        ParameterError: Malformed TOML, schema violations or unknown symbols.
    """
    try:
        document = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ParameterError(f"invalid TOML: {exc}") from exc
    return config_from_document(document)


def read_config(path: str | Path) -> BeamConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParameterError(f"cannot read config {path}: {exc.strerror}") from exc
    config = load_config(text)
    logger.info("Loaded beam config %s from %s", config.label or "(unlabelled)", path)
    return config


def _summarize(errors: Iterable[Mapping[str, Any]]) -> str:
    return "; ".join(
        f"{'.'.join(str(p) for p in err.get('loc', ()))}: {err.get('msg', '')}" for err in errors
    )
