"""Tests for invariant profiles, the separation test and the temporal solve."""

from __future__ import annotations

import math

import pytest

from beamsym.core.errors import ParameterError, SingularCharacteristicError, UnsupportedFormError
from beamsym.services.beam_model import (
    BeamConfig,
    TemporalKind,
    TemporalFactor,
    const,
    coordinate,
    exp,
    grid_points,
    max_relative_residual,
)
from beamsym.services.catalog import build_case
from beamsym.services.reduction import (
    assemble_solution,
    invariant_profile,
    invariant_profile_fn,
    profile_ratio_spread,
    round_trip,
    separation_constant,
    separation_grid,
    temporal_solve,
)

x = coordinate()


class TestInvariantProfile:
    def test_quadratic_xi(self) -> None:
        assert invariant_profile(x**2 / 2, const(1), 1.0, 0.5) == pytest.approx(math.exp(-2.0))

    def test_normalization_at_infinity(self) -> None:
        assert invariant_profile(x**2 / 2, const(1), math.inf, 0.5) == pytest.approx(math.exp(-4.0))

    def test_linear_xi_gives_a_power(self) -> None:
        assert invariant_profile(x, const(3), 1.0, 2.0) == pytest.approx(8.0)

    def test_exponential_family(self) -> None:
        v = 1.5
        xi = exp(v * x) / (2 * v**2)
        f1 = exp(v * x) / v
        phi = invariant_profile_fn(xi, f1, 0.2)
        for xv in (0.0, 0.5, 1.0):
            assert phi.value(xv) == pytest.approx(math.exp(2 * v * (xv - 0.2)))

    def test_quadrature_fallback(self) -> None:
        xi = 1 + x
        assert invariant_profile(xi, const(1), 0.0, 1.0) == pytest.approx(2.0, rel=1e-9)
        phi = invariant_profile_fn(xi, const(1), 0.0)
        jet = phi.jet(1.0)
        assert jet.value == pytest.approx(2.0, rel=1e-9)
        assert jet.slot(1) == pytest.approx(1.0, rel=1e-9)
        assert jet.slot(2) == pytest.approx(0.0, abs=1e-9)

    def test_vanishing_xi_is_singular(self) -> None:
        with pytest.raises(SingularCharacteristicError, match="vanishes"):
            invariant_profile(x - 0.5, const(1), 0.2, 0.8)

    def test_vanishing_xi_inside_domain(self) -> None:
        with pytest.raises(SingularCharacteristicError):
            invariant_profile_fn(x - 0.5, const(1), 0.8, domain=(0.0, 1.0))

    def test_infinity_needs_a_finite_limit(self) -> None:
        with pytest.raises(ParameterError):
            invariant_profile_fn(x, const(1), math.inf)


class TestSeparationConstant:
    def test_exponential_on_uniform_config(self, uniform_config: BeamConfig) -> None:
        report = separation_constant(uniform_config, exp(x))
        assert report.constant
        assert report.s == pytest.approx(-1.0)
        assert len(report.samples) == 33

    def test_case_b_profile_is_static(self) -> None:
        bundle = build_case("b")
        report = separation_constant(bundle.config, bundle.solution.profile)
        assert report.constant
        assert report.s == 0.0

    def test_boundary_value_profile(self) -> None:
        bundle = build_case("bvp")
        report = separation_constant(bundle.config, bundle.solution.profile)
        assert report.constant
        assert report.s == pytest.approx(-14.4, rel=1e-9)

    def test_non_separable_profile(self, uniform_config: BeamConfig) -> None:
        report = separation_constant(uniform_config, x**4 + 1)
        assert not report.constant
        assert report.max_deviation > 1.0

    def test_scale_invariance(self) -> None:
        bundle = build_case("a1")
        base = separation_constant(bundle.config, bundle.solution.profile)
        scaled = separation_constant(bundle.config, 3.0 * bundle.solution.profile)
        for (_, s1), (_, s2) in zip(base.samples, scaled.samples):
            assert s2 == pytest.approx(s1, rel=1e-12)
        assert scaled.constant == base.constant

    def test_zero_of_profile_is_excluded(self, uniform_config: BeamConfig) -> None:
        report = separation_constant(uniform_config, x - 0.5, [0.25, 0.5, 0.75, 0.9])
        assert report.excluded == [0.5]
        assert report.constant
        assert any("excluded" in note for note in report.notes)

    def test_csv(self, uniform_config: BeamConfig) -> None:
        lines = separation_constant(uniform_config, exp(x)).to_csv().splitlines()
        assert lines[0] == "x,S"
        assert len(lines) == 1 + 33 + 1
        assert lines[-1].startswith("# S=")

    def test_default_grid_avoids_the_ends(self) -> None:
        grid = separation_grid((0.0, 2.0), 4)
        assert grid == pytest.approx([0.25, 0.75, 1.25, 1.75])

    def test_needs_two_points(self, uniform_config: BeamConfig) -> None:
        with pytest.raises(ParameterError):
            separation_constant(uniform_config, exp(x), [0.5])


class TestTemporalSolve:
    def test_affine_branch(self) -> None:
        temporal = temporal_solve(0.0, 1.0, 2.0)
        assert temporal.kind is TemporalKind.AFFINE
        assert temporal.value(3.0) == pytest.approx(7.0)

    def test_hyperbolic_branch(self) -> None:
        temporal = temporal_solve(2.0, 1.0, 0.0)
        assert temporal.kind is TemporalKind.HYPERBOLIC
        assert (temporal.a1, temporal.a2) == pytest.approx((0.5, 0.5))
        assert temporal.value(0.7) == pytest.approx(math.cosh(math.sqrt(2.0) * 0.7))

    def test_trigonometric_branch(self) -> None:
        temporal = temporal_solve(-14.4, 1.0, 0.0)
        assert temporal.kind is TemporalKind.TRIGONOMETRIC
        assert temporal.rate == pytest.approx(3.794733, abs=1e-6)
        assert temporal.value(0.5) == pytest.approx(math.cos(3.7947331922 * 0.5))

    def test_tiny_constant_is_zero(self) -> None:
        assert temporal_solve(1e-12, 1.0, 1.0).kind is TemporalKind.AFFINE

    @pytest.mark.parametrize("s", [3.0, 0.0, -2.5])
    def test_ode_holds_pointwise(self, s: float) -> None:
        temporal = temporal_solve(s, 0.7, -1.3)
        f0, f0dot, _ = temporal.derivatives(0.0)
        assert (f0, f0dot) == pytest.approx((0.7, -1.3))
        for k in range(20):
            f, _, f2 = temporal.derivatives(0.1 * k)
            assert abs(f2 - s * f) <= 1e-12 * max(1.0, abs(s * f))


class TestAssembleSolution:
    def test_zero_temporal_factor(self, uniform_config: BeamConfig) -> None:
        solution = assemble_solution(x**4, TemporalFactor.affine(0.0))
        worst, _ = max_relative_residual(uniform_config, solution, grid_points((0.0, 1.0), 1.0))
        assert worst == 0.0

    def test_boundary_value_solution(self) -> None:
        bundle = build_case("bvp")
        solution = assemble_solution(bundle.solution.profile, temporal_solve(-14.4, 1.0, 0.0))
        worst, _ = max_relative_residual(bundle.config, solution, grid_points((0.0, 1.0), 1.0))
        assert worst <= 1e-9


class TestProfileRatioSpread:
    def test_scaled_profile_is_proportional(self) -> None:
        assert profile_ratio_spread(3.0 * exp(x), exp(x), [0.1, 0.5, 0.9]) == pytest.approx(
            0.0, abs=1e-15
        )

    def test_different_shapes(self) -> None:
        assert profile_ratio_spread(const(1), exp(x), [0.0, 1.0]) == pytest.approx(
            1.0 - math.exp(-1.0)
        )

    def test_vanishing_catalog_profile_is_skipped(self) -> None:
        assert profile_ratio_spread(2 * (x - 0.5), x - 0.5, [0.25, 0.5, 0.75]) == 0.0


class TestRoundTrip:
    @pytest.mark.parametrize("name", ["a1", "b", "bvp"])
    def test_separable_cases_are_rebuilt(self, name: str) -> None:
        bundle = build_case(name)
        result = round_trip(bundle)
        assert result.separable
        assert result.max_residual is not None
        assert result.max_residual <= 1e-9
        assert result.ratio_spread <= 1e-8
        xs = separation_grid(bundle.config.domain, 5)
        ratios = [result.profile.value(xv) / bundle.solution.profile.value(xv) for xv in xs]
        assert ratios == pytest.approx([ratios[0]] * len(xs), rel=1e-8)

    def test_generator_without_the_catalog_profile_is_unsupported(self) -> None:
        bundle = build_case("a2")
        with pytest.raises(UnsupportedFormError, match="not proportional"):
            round_trip(bundle)
        profile = invariant_profile_fn(bundle.inf.xi, bundle.inf.u_coefficient(), 0.5)
        assert profile_ratio_spread(profile, bundle.solution.profile, [0.1, 0.5, 0.9]) > 0.1

    def test_rebuilt_constants(self) -> None:
        assert round_trip(build_case("a1")).report.s == pytest.approx(2.0, rel=1e-9)
        assert round_trip(build_case("bvp")).report.s == pytest.approx(-14.4, rel=1e-9)
        assert round_trip(build_case("b")).temporal.kind is TemporalKind.AFFINE

    def test_offset_family_does_not_separate(self) -> None:
        result = round_trip(build_case("c"))
        assert not result.separable
        assert result.solution is None
