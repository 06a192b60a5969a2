"""``catalog``: print a case bundle."""

from __future__ import annotations

from beamsym.cli.commands.common import CommandResult, bundle_for
from beamsym.schemas.run_spec import RunSpec


def run_catalog(spec: RunSpec) -> CommandResult:
    return CommandResult(bundle_for(spec).export())
