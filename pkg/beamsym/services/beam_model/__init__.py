"""Beam coefficients, closed-form solutions and the beam operator residual."""

from beamsym.services.beam_model.beam import FIELDS, UNITS, BeamConfig
from beamsym.services.beam_model.coefficients import (
    Affine,
    CoefficientFn,
    Const,
    Coordinate,
    Exp,
    Log,
    Neg,
    Param,
    Polynomial,
    Power,
    Product,
    Quotient,
    Sum,
    TailIntegral,
    X_SYMBOL,
    affine,
    as_fn,
    check_positive,
    const,
    coordinate,
    exp,
    from_sympy,
    log,
    param,
    parse_expression,
    polynomial,
    polynomial_coefficients,
    sample_field,
    sqrt,
)
from beamsym.services.beam_model.residual import (
    TERM_NAMES,
    ResidualTerms,
    grid_points,
    max_relative_residual,
    relative_residual,
    residual,
    residual_terms,
)
from beamsym.services.beam_model.serialization import (
    dump_config,
    load_config,
    read_config,
    write_config,
)
from beamsym.services.beam_model.solution import (
    ClosedFormSolution,
    DisplacementField,
    LinearCombination,
    TemporalFactor,
    TemporalKind,
)
from beamsym.services.beam_model.tension import IntegrationMode, TensionKind, build_tension

__all__ = [
    "Affine",
    "BeamConfig",
    "ClosedFormSolution",
    "CoefficientFn",
    "Const",
    "Coordinate",
    "DisplacementField",
    "Exp",
    "FIELDS",
    "IntegrationMode",
    "LinearCombination",
    "Log",
    "Neg",
    "Param",
    "Polynomial",
    "Power",
    "Product",
    "Quotient",
    "ResidualTerms",
    "Sum",
    "TERM_NAMES",
    "TailIntegral",
    "TemporalFactor",
    "TemporalKind",
    "TensionKind",
    "UNITS",
    "X_SYMBOL",
    "affine",
    "as_fn",
    "build_tension",
    "check_positive",
    "const",
    "coordinate",
    "dump_config",
    "exp",
    "from_sympy",
    "grid_points",
    "load_config",
    "log",
    "max_relative_residual",
    "param",
    "parse_expression",
    "polynomial",
    "polynomial_coefficients",
    "read_config",
    "relative_residual",
    "residual",
    "residual_terms",
    "sample_field",
    "sqrt",
    "write_config",
]
