"""Tests for the case registry and bundle export."""

from __future__ import annotations

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

import pytest

from beamsym.core.errors import ParameterError
from beamsym.services.beam_model import load_config
from beamsym.services.catalog import CASES, build_case, golden_case, resolve_params


class TestRegistry:
    def test_every_case_is_registered(self) -> None:
        assert list(CASES) == ["a1", "a2", "b", "c", "bvp"]

    @pytest.mark.parametrize("name", ["a1", "a2", "b", "c", "bvp"])
    def test_defaults_match_golden_parameters(self, name: str) -> None:
        assert CASES[name].defaults == pytest.approx(golden_case(name).params)

    def test_overrides_are_applied(self) -> None:
        bundle = build_case("b", {"v": 2.0})
        assert bundle.params["v"] == 2.0
        assert bundle.config.ei.parameters()["v"] == 2.0

    def test_unknown_case(self) -> None:
        with pytest.raises(ParameterError, match="unknown case 'z'"):
            build_case("z")

    def test_unknown_parameter(self) -> None:
        with pytest.raises(ParameterError, match="unknown parameter"):
            resolve_params("b", {"k": 1.0})


class TestExport:
    def test_case_b_document(self) -> None:
        text = build_case("b").export()
        assert "# EI = a1*exp(-v*x)" in text
        document = tomllib.loads(text)
        assert document["solution"]["temporal_kind"] == "affine"
        assert document["infinitesimals"]["certified"][-1] == "R11"
        assert document["params"]["v"] == 1.0

    @pytest.mark.parametrize("name", ["a2", "b", "bvp"])
    def test_exported_coefficients_reload(self, name: str) -> None:
        bundle = build_case(name)
        config = load_config(bundle.export())
        for xv in (0.1, 0.5, 0.9):
            assert config.ei.value(xv) == pytest.approx(bundle.config.ei.value(xv), rel=1e-12)
            assert config.t.value(xv) == pytest.approx(bundle.config.t.value(xv), rel=1e-12, abs=1e-14)
