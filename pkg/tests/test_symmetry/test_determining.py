"""Tests for the determining-equation residuals of a single point."""

from __future__ import annotations

import pytest

from beamsym.core.errors import EvaluationError, ParameterError
from beamsym.services.beam_model import BeamConfig, const, coordinate
from beamsym.services.catalog import case_b
from beamsym.services.symmetry import (
    LABELS,
    STRUCTURAL,
    Infinitesimals,
    determining_residuals,
    u_affinity_defects,
)

x = coordinate()


class TestStructuralEquations:
    @pytest.mark.parametrize("point", [(0.1, 0.0, 0.0), (0.5, 0.7, 1.0), (0.9, 2.0, -10.0)])
    def test_structural_equations_vanish(self, point) -> None:
        bundle = case_b()
        report = determining_residuals(bundle.config, bundle.inf, *point)
        for label in ("R1", "R2", "R3", "R4", "R11"):
            assert report[label].value == 0.0

    def test_structural_labels_are_a_subset(self) -> None:
        assert set(STRUCTURAL) <= set(LABELS)
        assert len(LABELS) == 11


class TestCaseB:
    def test_r5_vanishes_for_constant_coefficient_of_u(self) -> None:
        bundle = case_b()
        report = determining_residuals(bundle.config, bundle.inf, 0.4, 1.0, 1.0)
        assert report["R5"].value == pytest.approx(0.0, abs=1e-12)
        assert report["R6"].passes(1e-9)

    def test_r5_picks_up_linear_f1(self) -> None:
        # f1 = x leaves only -T' f1' u = 2 a1 v^3 at x = 0
        bundle = case_b()
        inf = Infinitesimals(xi=bundle.inf.xi, f1=x)
        report = determining_residuals(bundle.config, inf, 0.0, 0.0, 1.0)
        assert report["R5"].value == pytest.approx(2.0)

    def test_r5_vanishes_at_u_zero(self) -> None:
        bundle = case_b()
        inf = Infinitesimals(xi=bundle.inf.xi, f1=x)
        report = determining_residuals(bundle.config, inf, 0.3, 0.0, 0.0)
        assert report["R5"].value == 0.0

    def test_r7_and_r8_are_constant_in_x(self) -> None:
        bundle = case_b()
        for xv in (0.1, 0.5, 0.9):
            report = determining_residuals(bundle.config, bundle.inf, xv, 0.0, 1.0)
            assert report["R7"].value == pytest.approx(-2.0)
            assert report["R8"].value == pytest.approx(1.0)

    def test_failing_lists_the_non_vanishing_equations(self) -> None:
        bundle = case_b()
        report = determining_residuals(bundle.config, bundle.inf, 0.5, 0.5, 1.0)
        assert report.failing() == ["R7", "R8", "R9"]


class TestUniformBeam:
    def test_translation_satisfies_every_equation(self, uniform_config: BeamConfig) -> None:
        report = determining_residuals(uniform_config, Infinitesimals(xi=const(1)), 0.5, 0.3, 1.0)
        assert report.failing() == []

    def test_time_scaling_breaks_only_the_mass_equation(self, uniform_config: BeamConfig) -> None:
        report = determining_residuals(
            uniform_config, Infinitesimals(xi=const(0), omega=2.0), 0.5, 0.3, 1.0
        )
        assert report.failing() == ["R9"]
        assert report["R9"].value == pytest.approx(-2.0)


class TestErrors:
    def test_zero_stiffness_names_the_equation(self) -> None:
        config = BeamConfig(ei=x, m=const(1), t=const(0), domain=(0.0, 1.0))
        with pytest.raises(EvaluationError, match=r"R6 at \(x=0.0"):
            determining_residuals(config, Infinitesimals(xi=const(1)), 0.0, 0.0, 1.0)

    def test_point_outside_domain(self, uniform_config: BeamConfig) -> None:
        with pytest.raises(ParameterError, match="outside the domain"):
            determining_residuals(uniform_config, Infinitesimals(xi=const(1)), 1.5, 0.0, 0.0)


class TestAffinityInU:
    @pytest.mark.parametrize("point", [(0.2, 0.1), (0.6, 0.9)])
    def test_residuals_are_affine_in_u(self, point) -> None:
        bundle = case_b()
        inf = Infinitesimals(xi=bundle.inf.xi, f1=x**2, omega=1.0, d1=0.5, d2=0.25)
        defects = u_affinity_defects(bundle.config, inf, *point)
        assert max(defects.values()) <= 1e-10 * 100
