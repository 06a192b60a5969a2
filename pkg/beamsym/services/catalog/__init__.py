"""Closed-form coefficient families and their solutions."""

from beamsym.services.catalog.bundle import CaseBundle
from beamsym.services.catalog.bvp import (
    bvp_case,
    bvp_masses,
    bvp_masses_by_root_finding,
    free_end_defects,
)
from beamsym.services.catalog.cases import (
    admissible_r0,
    case_a1,
    case_a2,
    case_b,
    case_c,
    temporal_for,
)
from beamsym.services.catalog.golden import certified_equations, golden_case, load_manifest
from beamsym.services.catalog.registry import (
    CASES,
    CaseSpec,
    build_case,
    get_case,
    resolve_params,
)

__all__ = [
    "CASES",
    "CaseBundle",
    "CaseSpec",
    "admissible_r0",
    "build_case",
    "bvp_case",
    "bvp_masses",
    "bvp_masses_by_root_finding",
    "case_a1",
    "case_a2",
    "case_b",
    "case_c",
    "certified_equations",
    "free_end_defects",
    "get_case",
    "golden_case",
    "load_manifest",
    "resolve_params",
    "temporal_for",
]
