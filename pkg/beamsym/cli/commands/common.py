"""Shared helpers for the command implementations."""

from __future__ import annotations

from dataclasses import dataclass, replace

from beamsym.core.logging import get_logger
from beamsym.schemas.run_spec import RunSpec
from beamsym.services.beam_model import read_config
from beamsym.services.catalog import CaseBundle, build_case

logger = get_logger(__name__)

PASS, FAIL = 0, 1


@dataclass
class CommandResult:
    """Text destined for ``--out`` (or stdout) and the process exit code."""

    text: str
    exit_code: int = PASS


def bundle_for(spec: RunSpec) -> CaseBundle:
    """Build the case, then apply ``--config`` and ``--perturb``."""
    bundle = build_case(spec.case, spec.params)
    config = bundle.config
    if spec.config is not None:
        config = read_config(spec.config)
        logger.info("Using beam config from %s", spec.config)
    for name, factor in spec.perturb.items():
        config = config.scaled(name, factor)
        logger.info("Perturbed %s by a factor %g", name, factor)
    if config is not bundle.config:
        bundle = replace(bundle, config=config)
    return bundle


def verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"
