"""Command-line interface."""

from beamsym.cli.main import build_parser, main, parse_run_spec

__all__ = ["build_parser", "main", "parse_run_spec"]
