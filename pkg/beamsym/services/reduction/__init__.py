"""Invariant reduction: profile, separation test and temporal solve."""

from beamsym.services.reduction.profile import (
    check_path,
    closed_form_antiderivative,
    invariant_profile,
    invariant_profile_fn,
)
from beamsym.services.reduction.round_trip import (
    RoundTripResult,
    profile_ratio_spread,
    residual_grid,
    round_trip,
)
from beamsym.services.reduction.separation import (
    SeparationReport,
    separation_constant,
    separation_grid,
    spatial_operator_terms,
)
from beamsym.services.reduction.temporal import assemble_solution, temporal_solve

__all__ = [
    "RoundTripResult",
    "SeparationReport",
    "assemble_solution",
    "check_path",
    "closed_form_antiderivative",
    "invariant_profile",
    "invariant_profile_fn",
    "profile_ratio_spread",
    "residual_grid",
    "round_trip",
    "separation_constant",
    "separation_grid",
    "spatial_operator_terms",
]
