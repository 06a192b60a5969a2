"""``simulate`` and ``compare``: method-of-lines runs."""

from __future__ import annotations

import numpy as np

from beamsym.cli.commands.common import FAIL, PASS, CommandResult, bundle_for, verdict
from beamsym.core.errors import DomainMismatchError
from beamsym.schemas.run_spec import RunSpec
from beamsym.services.catalog import CaseBundle
from beamsym.services.fdsolver import Grid, Trajectory, compare, initial_data_from, simulate

COMPARE_TOLERANCE = 0.01


def _trajectory(spec: RunSpec, bundle: CaseBundle) -> Trajectory:
    grid = Grid(spec.n, bundle.config.domain)
    if spec.h == "zero":
        h, v0 = np.zeros(grid.unknowns), np.zeros(grid.unknowns)
    else:
        h, v0 = initial_data_from(bundle.solution, grid)
    return simulate(bundle.config, h, v0, dt=spec.dt, t_end=spec.t_end, grid=grid)


def run_simulate(spec: RunSpec) -> CommandResult:
    traj = _trajectory(spec, bundle_for(spec))
    return CommandResult(traj.to_csv(stride=spec.stride))


def run_compare(spec: RunSpec) -> CommandResult:
    """PASS iff the relative max error stays within ``--tol`` (default 1%)."""
    bundle = bundle_for(spec)
    domain = bundle.solution.domain
    if domain is not None and not np.allclose(domain, bundle.config.domain, rtol=0.0, atol=1e-12):
        raise DomainMismatchError(
            f"beam domain {list(bundle.config.domain)} differs from solution domain {list(domain)}"
        )
    traj = _trajectory(spec, bundle)
    table = compare(traj, bundle.solution)
    tol = spec.tol or COMPARE_TOLERANCE
    ok = table.relative_max_error <= tol
    text = table.to_csv(stride=spec.stride) + f"# {verdict(ok)} tol={tol:g}\n"
    return CommandResult(text, PASS if ok else FAIL)
