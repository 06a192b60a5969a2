"""Tests for argument parsing into a RunSpec."""

from __future__ import annotations

import pytest

from beamsym.cli.main import parse_pairs, parse_run_spec
from beamsym.core.errors import ParameterError, UsageError


class TestParsePairs:
    def test_space_and_equals_forms(self) -> None:
        assert parse_pairs(["--v", "1", "--a1=2.5"]) == {"v": 1.0, "a1": 2.5}

    def test_negative_value(self) -> None:
        assert parse_pairs(["--c2", "-0.5"]) == {"c2": -0.5}

    def test_missing_value(self) -> None:
        with pytest.raises(UsageError, match="needs a value"):
            parse_pairs(["--v"])

    def test_not_a_number(self) -> None:
        with pytest.raises(UsageError, match="not a number"):
            parse_pairs(["--v", "fast"])

    def test_bare_token(self) -> None:
        with pytest.raises(UsageError, match="unexpected argument"):
            parse_pairs(["v", "1"])


class TestParseRunSpec:
    def test_case_parameters(self) -> None:
        spec, level = parse_run_spec(["catalog", "--case", "b", "--v", "1", "--a1", "2"])
        assert spec.command == "catalog"
        assert spec.params == {"v": 1.0, "a1": 2.0}
        assert level

    def test_simulation_options(self) -> None:
        spec, _ = parse_run_spec(
            ["simulate", "--case", "bvp", "--n", "32", "--dt", "0.01", "--t-end", "0.5", "--h", "zero"]
        )
        assert (spec.n, spec.dt, spec.t_end, spec.h) == (32, 0.01, 0.5, "zero")
        assert spec.params == {}

    def test_grid_size_is_a_case_parameter_outside_simulation(self) -> None:
        spec, _ = parse_run_spec(["verify", "--case", "c", "--n", "5"])
        assert spec.params == {"n": 5.0}

    def test_perturbations(self) -> None:
        spec, _ = parse_run_spec(["verify", "--case", "b", "--perturb", "EI=1.1", "--perturb", "t=2"])
        assert spec.perturb == {"ei": 1.1, "t": 2.0}

    def test_unknown_perturbation_field(self) -> None:
        with pytest.raises(UsageError, match="cannot perturb"):
            parse_run_spec(["verify", "--case", "b", "--perturb", "rho=2"])

    def test_unknown_case(self) -> None:
        with pytest.raises(ParameterError, match="unknown case"):
            parse_run_spec(["catalog", "--case", "z"])

    def test_unknown_parameter(self) -> None:
        with pytest.raises(ParameterError, match="unknown parameter"):
            parse_run_spec(["catalog", "--case", "b", "--zeta", "1"])

    def test_missing_case(self) -> None:
        with pytest.raises(UsageError):
            parse_run_spec(["verify"])

    def test_grid_too_coarse(self) -> None:
        with pytest.raises(UsageError, match="n"):
            parse_run_spec(["simulate", "--case", "bvp", "--n", "4"])
