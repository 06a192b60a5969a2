"""Tests for grids and the discrete spatial operator."""

from __future__ import annotations

import numpy as np
import pytest

from beamsym.core.errors import DomainMismatchError, ParameterError
from beamsym.services.beam_model import BeamConfig, const, coordinate
from beamsym.services.catalog import build_case
from beamsym.services.fdsolver import Grid, apply_interior, discretize, static_deflection

x = coordinate()

END_ROWS = 5


def _nodal(profile, grid: Grid) -> np.ndarray:
    return np.array([profile.value(float(xv)) for xv in grid.points])


class TestGrid:
    def test_spacing_and_nodes(self) -> None:
        grid = Grid(31)
        assert grid.dx == pytest.approx(1.0 / 32.0)
        assert grid.points[0] == 0.0
        assert grid.points[-1] == pytest.approx(1.0)
        assert len(grid.points) == 33
        assert grid.unknowns == 32

    def test_refinement_halves_spacing(self) -> None:
        grid = Grid(31, (0.0, 2.0))
        assert grid.refined().dx == pytest.approx(grid.dx / 2)

    @pytest.mark.parametrize("n", [15, 0, 20.5])
    def test_rejects_coarse_or_fractional_grids(self, n) -> None:
        with pytest.raises(ParameterError):
            Grid(n)


class TestDiscretize:
    def test_quartic_gives_constant_fourth_derivative(self, uniform_config: BeamConfig) -> None:
        grid = Grid(32)
        disc = discretize(uniform_config, grid)
        result = disc.apply(grid.points[1:] ** 4)
        assert result[:-2] == pytest.approx(np.full(grid.unknowns - 2, 24.0), rel=1e-6)

    def test_zero_vector(self, uniform_config: BeamConfig) -> None:
        grid = Grid(20)
        assert np.all(discretize(uniform_config, grid).apply(np.zeros(grid.unknowns)) == 0.0)

    def test_wrong_vector_length(self, uniform_config: BeamConfig) -> None:
        disc = discretize(uniform_config, Grid(20))
        with pytest.raises(ParameterError):
            disc.apply(np.zeros(5))

    @pytest.mark.parametrize("name", ["b", "bvp"])
    def test_interior_operator_is_symmetric(self, name: str) -> None:
        bundle = build_case(name)
        disc = discretize(bundle.config, Grid(40, bundle.config.domain))
        assert disc.asymmetry() <= 1e-10

    def test_boundary_value_profile_is_an_eigenvector_away_from_the_ends(
        self, bvp_bundle
    ) -> None:
        # The two rows next to the free end carry an O(1) truncation error of
        # opposite sign that cancels under the tip's half-cell weight.
        nu_squared = -bvp_bundle.metadata["separation_constant"]
        errors = []
        for n in (63, 127):
            grid = Grid(n)
            disc = discretize(bvp_bundle.config, grid)
            phi = _nodal(bvp_bundle.solution.profile, grid)[1:]
            expected = nu_squared * disc.mass * phi
            diff = np.abs(disc.apply(phi) - expected)[END_ROWS:-END_ROWS]
            errors.append(float(np.max(diff)) / float(np.max(np.abs(expected))))
        assert errors[1] <= 1e-3
        assert 3.0 < errors[0] / errors[1] < 5.0

    def test_boundary_value_profile_is_recovered_at_second_order(self, bvp_bundle) -> None:
        nu_squared = -bvp_bundle.metadata["separation_constant"]
        errors = []
        for n in (63, 127):
            grid = Grid(n)
            disc = discretize(bvp_bundle.config, grid)
            phi = _nodal(bvp_bundle.solution.profile, grid)
            load = nu_squared * disc.mass * phi[1:]
            u = static_deflection(bvp_bundle.config, grid, tip_shear=0.0, load=load)
            errors.append(float(np.max(np.abs(u - phi))) / float(np.max(np.abs(phi))))
        assert errors[1] <= 1e-2
        assert 3.0 < errors[0] / errors[1] < 5.0

    def test_non_positive_mass(self) -> None:
        config = BeamConfig(ei=const(1), m=0.5 - x, t=const(0))
        with pytest.raises(ParameterError, match="m must be positive"):
            discretize(config, Grid(20))

    def test_grid_must_cover_the_beam(self, uniform_config: BeamConfig) -> None:
        with pytest.raises(DomainMismatchError):
            discretize(uniform_config, Grid(20, (0.0, 2.0)))


class TestApplyInterior:
    def test_callable_and_nodal_values_agree(self, uniform_config: BeamConfig) -> None:
        grid = Grid(24)
        from_callable = apply_interior(uniform_config, grid, lambda xv: xv**4)
        from_nodes = apply_interior(uniform_config, grid, grid.points**4)
        # x**4 carries about one ulp of rounding per node; the stencil scales it by dx**-4.
        roundoff = 64 * np.finfo(float).eps / grid.dx**4
        assert np.max(np.abs(from_callable - from_nodes)) <= roundoff
        assert from_callable[:-2] == pytest.approx(np.full(grid.unknowns - 2, 24.0), rel=1e-6)

    def test_tension_only(self) -> None:
        config = BeamConfig(ei=const(0), m=const(1), t=const(2), domain=(0.0, 1.0))
        grid = Grid(20)
        result = apply_interior(config, grid, lambda xv: xv**2)
        assert result[:-1] == pytest.approx(np.full(grid.unknowns - 1, -4.0), rel=1e-9)

    def test_wrong_length(self, uniform_config: BeamConfig) -> None:
        with pytest.raises(ParameterError):
            apply_interior(uniform_config, Grid(20), np.zeros(4))


class TestStaticDeflection:
    def test_cantilever_with_tip_shear(self, uniform_config: BeamConfig) -> None:
        grid = Grid(32)
        u = static_deflection(uniform_config, grid, tip_shear=1.0)
        exact = grid.points**2 * (3.0 - grid.points) / 6.0
        assert u[0] == 0.0
        assert np.max(np.abs(u - exact)) <= 1e-2 * np.max(exact)

    def test_deflection_converges(self, uniform_config: BeamConfig) -> None:
        errors = []
        for n in (31, 63):
            grid = Grid(n)
            u = static_deflection(uniform_config, grid, tip_shear=1.0)
            errors.append(np.max(np.abs(u - grid.points**2 * (3.0 - grid.points) / 6.0)))
        assert errors[1] < errors[0]
