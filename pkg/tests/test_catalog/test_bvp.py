"""Tests for the clamped-free boundary-value family."""

from __future__ import annotations

import math

import numpy as np
import pytest

from beamsym.core.errors import ParameterError
from beamsym.services.beam_model import grid_points, max_relative_residual
from beamsym.services.catalog import (
    bvp_case,
    bvp_masses,
    bvp_masses_by_root_finding,
    free_end_defects,
)


class TestMasses:
    def test_unit_root_mass(self) -> None:
        m1, m2 = bvp_masses(1.0)
        assert m1 == pytest.approx(-0.840295, abs=1e-6)
        assert m2 == pytest.approx(0.277816, abs=1e-6)

    @pytest.mark.parametrize("m0", [0.5, 1.0, 2.0])
    def test_closed_form_agrees_with_root_finding(self, m0: float) -> None:
        closed = bvp_masses(m0)
        solved = bvp_masses_by_root_finding(m0)
        assert closed == pytest.approx(solved, rel=1e-6)
        assert max(abs(d) for d in free_end_defects(m0, *closed)) <= 1e-12 * max(1.0, m0**2)

    def test_rejects_non_positive_root_mass(self) -> None:
        with pytest.raises(ParameterError):
            bvp_masses(0.0)


class TestBoundaryValueCase:
    def test_frequency(self, bvp_bundle) -> None:
        assert bvp_bundle.metadata["nu"] == pytest.approx(3.794733, abs=1e-6)
        assert bvp_bundle.metadata["separation_constant"] == pytest.approx(-14.4)

    def test_clamped_end(self, bvp_bundle) -> None:
        jet = bvp_bundle.solution.profile.jet(0.0)
        assert jet.slot(0) == 0.0
        assert jet.slot(1) == 0.0

    def test_free_end(self, bvp_bundle) -> None:
        profile = bvp_bundle.solution.profile
        curvature = max(abs(profile.jet(float(xv)).slot(2)) for xv in np.linspace(0, 1, 21))
        tip = profile.jet(1.0)
        assert abs(tip.slot(2)) <= 1e-9 * curvature
        assert abs(tip.slot(3)) <= 1e-9 * curvature

    def test_solution_satisfies_the_beam_equation(self, bvp_bundle) -> None:
        worst, _ = max_relative_residual(
            bvp_bundle.config, bvp_bundle.solution, grid_points((0.0, 1.0), 1.0)
        )
        assert worst <= 1e-9

    def test_quarter_period_initial_data(self) -> None:
        bundle = bvp_case(A1=0.0, A2=1.0)
        nu = bundle.metadata["nu"]
        assert bundle.solution.value(1.0, math.pi / (2 * nu)) == pytest.approx(
            bundle.solution.profile.value(1.0)
        )

    def test_generator_moves_the_free_end(self, bvp_bundle) -> None:
        assert bvp_bundle.metadata["xi_free_end"] != 0.0
        assert bvp_bundle.inf.xi.value(0.0) == 0.0

    def test_rejects_non_positive_stiffness_scale(self) -> None:
        with pytest.raises(ParameterError, match="g1 > 0"):
            bvp_case(g1=0.0)
