"""Symmetry generators and their determining-equation residuals."""

from beamsym.services.symmetry.certify import (
    U_CYCLE,
    CertifyReport,
    EquationSummary,
    certify,
    sample_points,
    u_affinity_defects,
)
from beamsym.services.symmetry.determining import (
    LABELS,
    STRUCTURAL,
    DeterminingReport,
    EquationResidual,
    determining_residuals,
)
from beamsym.services.symmetry.infinitesimals import Infinitesimals

__all__ = [
    "CertifyReport",
    "DeterminingReport",
    "EquationResidual",
    "EquationSummary",
    "Infinitesimals",
    "LABELS",
    "STRUCTURAL",
    "U_CYCLE",
    "certify",
    "determining_residuals",
    "sample_points",
    "u_affinity_defects",
]
