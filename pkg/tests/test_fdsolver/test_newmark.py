"""Tests for time stepping, comparison and convergence."""

from __future__ import annotations

import numpy as np
import pytest

from beamsym.core.errors import DomainMismatchError, ParameterError
from beamsym.services.beam_model import BeamConfig, ClosedFormSolution, TemporalFactor, const
from beamsym.services.fdsolver import (
    Grid,
    Trajectory,
    compare,
    convergence_study,
    initial_data_from,
    sample_initial,
    simulate,
)


class TestInitialData:
    def test_callable_array_and_none(self) -> None:
        grid = Grid(16)
        assert np.all(sample_initial(None, grid) == 0.0)
        assert sample_initial(lambda xv: 2 * xv, grid) == pytest.approx(2 * grid.points[1:])
        assert sample_initial(grid.points, grid) == pytest.approx(grid.points[1:])

    def test_wrong_length(self) -> None:
        with pytest.raises(ParameterError):
            sample_initial(np.zeros(3), Grid(16))

    def test_from_solution(self, bvp_bundle) -> None:
        grid = Grid(16)
        h, v0 = initial_data_from(bvp_bundle.solution, grid)
        assert h[-1] == pytest.approx(bvp_bundle.solution.profile.value(1.0))
        assert np.all(v0 == 0.0)


class TestSimulate:
    def test_rest_stays_at_rest(self, uniform_config: BeamConfig) -> None:
        traj = simulate(uniform_config, None, dt=0.01, t_end=0.1, grid=Grid(16))
        assert np.all(traj.states == 0.0)
        assert len(traj.times) == 11
        assert traj.times[-1] == pytest.approx(0.1)

    def test_invalid_step(self, uniform_config: BeamConfig) -> None:
        with pytest.raises(ParameterError, match="dt must be positive"):
            simulate(uniform_config, None, dt=0.0, t_end=1.0, grid=Grid(16))

    def test_final_time_is_hit_exactly(self, uniform_config: BeamConfig) -> None:
        traj = simulate(uniform_config, lambda xv: xv**2, dt=0.03, t_end=0.1, grid=Grid(16))
        assert traj.times[-1] == 0.1
        assert traj.metadata["steps"] == 4

    def test_boundary_value_case_matches_closed_form(self, bvp_bundle) -> None:
        grid = Grid(200)
        h, v0 = initial_data_from(bvp_bundle.solution, grid)
        traj = simulate(bvp_bundle.config, h, v0, dt=1e-3, t_end=2.0, grid=grid, store_every=20)
        assert np.all(traj.states[:, 0] == 0.0)
        table = compare(traj, bvp_bundle.solution)
        assert table.relative_max_error <= 0.01
        assert table.relative_rms_error <= 0.005

    def test_trajectory_csv(self, uniform_config: BeamConfig) -> None:
        traj = simulate(uniform_config, None, dt=0.01, t_end=0.05, grid=Grid(16))
        lines = traj.to_csv(stride=2, space_stride=17).splitlines()
        assert lines[0] == "t,x,u"
        # times 0, 0.02, 0.04 and the final 0.05, two nodes each
        assert len(lines) == 1 + 4 * 2
        assert lines[1] == "0,0,0"


class TestCompare:
    def test_exact_samples_have_no_error(self, bvp_bundle) -> None:
        grid = Grid(16)
        times = np.linspace(0.0, 1.0, 5)
        states = np.array(
            [[bvp_bundle.solution.value(float(xv), t) for xv in grid.points] for t in times]
        )
        table = compare(Trajectory(times, states, grid), bvp_bundle.solution)
        assert table.worst_error == 0.0
        lines = table.to_csv().splitlines()
        assert lines[0] == "t,x,u_num,u_exact,abs_err"
        assert lines[-1].startswith("# rel_rms_err=")

    def test_domain_mismatch(self, bvp_bundle) -> None:
        grid = Grid(16)
        traj = Trajectory(np.zeros(1), np.zeros((1, 18)), grid)
        other = ClosedFormSolution(const(1), TemporalFactor.affine(1.0), domain=(0.0, 2.0))
        with pytest.raises(DomainMismatchError):
            compare(traj, other)


@pytest.mark.slow
class TestConvergence:
    def test_second_order_on_the_boundary_value_case(self, bvp_bundle) -> None:
        study = convergence_study(bvp_bundle.config, bvp_bundle.solution, n_values=(31, 63, 127))
        assert all(1.8 <= order <= 2.2 for order in study.orders)
        assert study.to_csv().splitlines()[0] == "n,dx,dt,rel_max_err,order"

    def test_refining_the_acceptance_run_quarters_the_error(self, bvp_bundle) -> None:
        errors = []
        for n, dt, store_every in ((200, 1e-3, 20), (400, 5e-4, 40)):
            grid = Grid(n)
            h, v0 = initial_data_from(bvp_bundle.solution, grid)
            traj = simulate(
                bvp_bundle.config, h, v0, dt=dt, t_end=2.0, grid=grid, store_every=store_every
            )
            errors.append(compare(traj, bvp_bundle.solution).relative_max_error)
        assert errors[0] <= 0.01
        assert 3.2 <= errors[0] / errors[1] <= 4.8
