"""One module per command group."""

from beamsym.cli.commands.catalog import run_catalog
from beamsym.cli.commands.common import CommandResult
from beamsym.cli.commands.simulate import run_compare, run_simulate
from beamsym.cli.commands.verify import run_reduce, run_verify

__all__ = [
    "CommandResult",
    "run_catalog",
    "run_compare",
    "run_reduce",
    "run_simulate",
    "run_verify",
]
