"""Shared test fixtures for the beamsym test suite."""

from __future__ import annotations

import os
from dataclasses import dataclass

# Quiet the toolkit logger before anything reads settings; pydantic-settings
# picks up BEAMSYM_* variables when the module-level ``settings`` is built.
os.environ.setdefault("BEAMSYM_LOG_LEVEL", "WARNING")

import pytest

from beamsym.cli import main
from beamsym.services.beam_model import BeamConfig, const
from beamsym.services.catalog import CaseBundle, build_case


@dataclass
class CliRun:
    exit_code: int
    out: str
    err: str

    @property
    def error_line(self) -> str:
        lines = self.err.strip().splitlines()
        return lines[-1] if lines else ""


@pytest.fixture
def uniform_config() -> BeamConfig:
    """EI = m = 1, T = 0 on [0, 1]."""
    return BeamConfig(ei=const(1), m=const(1), t=const(0), domain=(0.0, 1.0), label="uniform")


@pytest.fixture(scope="session")
def bvp_bundle() -> CaseBundle:
    return build_case("bvp")


@pytest.fixture
def run_cli(capsys):
    """Run the CLI in-process and capture its streams."""

    def _run(*argv: str) -> CliRun:
        code = main(list(argv))
        captured = capsys.readouterr()
        return CliRun(code, captured.out, captured.err)

    return _run
