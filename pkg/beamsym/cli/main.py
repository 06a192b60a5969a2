"""Command-line entry point.

Usage:
    python -m beamsym <command> --case <name> [--<param> <value> ...] [options]

Commands are ``catalog``, ``verify``, ``reduce``, ``simulate`` and
``compare``.  Any ``--name value`` pair that is not a known option is a
case parameter override.  Exit status is 0 on PASS, 1 when a numeric
check fails and 2 for usage or parameter errors; failures print one
``error code=... message=...`` line on stderr.
"""

from __future__ import annotations

import argparse
import logging.config
import sys
from pathlib import Path
from typing import Callable, Sequence

from pydantic import ValidationError

from beamsym import __version__
from beamsym.cli.commands import (
    CommandResult,
    run_catalog,
    run_compare,
    run_reduce,
    run_simulate,
    run_verify,
)
from beamsym.core.config import settings
from beamsym.core.errors import BeamSymError, ParameterError, UnsupportedFormError, UsageError
from beamsym.core.logging import get_logger, setup_logging
from beamsym.core.logging_config import LOGGING_CONFIG
from beamsym.schemas.run_spec import RunSpec
from beamsym.services.catalog import resolve_params

logger = get_logger(__name__)

EXIT_USAGE = 2

COMMANDS: dict[str, Callable[[RunSpec], CommandResult]] = {
    "catalog": run_catalog,
    "verify": run_verify,
    "reduce": run_reduce,
    "simulate": run_simulate,
    "compare": run_compare,
}

HELP = {
    "catalog": "print the coefficients, solution and generator of a case",
    "verify": "check the closed-form residual and the certified determining equations",
    "reduce": "rebuild the solution from the generator by invariant reduction",
    "simulate": "integrate the beam numerically and print the trajectory",
    "compare": "simulate from the closed-form initial data and tabulate the error",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


# ── Parser ───────────────────────────────────────────────────────────


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False, allow_abbrev=False)
    common.add_argument("--case", required=True, help="catalog case: a1, a2, b, c or bvp")
    common.add_argument("--tol", type=float, help="pass threshold of the numeric check")
    common.add_argument("--out", type=Path, help="write output here instead of stdout")
    common.add_argument("--seed", type=int, default=settings.sample_seed)
    common.add_argument("--config", type=Path, help="TOML beam config replacing the case's")
    common.add_argument("--log-level", default=settings.log_level)

    parser = _Parser(prog="beamsym", description=__doc__.splitlines()[0], allow_abbrev=False)
    parser.add_argument("--version", action="version", version=f"beamsym {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    for name in COMMANDS:
        sub = commands.add_parser(name, parents=[common], help=HELP[name], allow_abbrev=False)
        if name == "verify":
            sub.add_argument("--samples", type=int, default=settings.certify_samples)
        if name in ("verify", "reduce", "simulate", "compare"):
            sub.add_argument(
                "--perturb",
                action="append",
                default=[],
                metavar="FIELD=FACTOR",
                help="scale ei, m or t by a factor (repeatable)",
            )
        if name in ("simulate", "compare"):
            sub.add_argument("--n", type=int, default=settings.fd_interior_points)
            sub.add_argument("--dt", type=float, default=settings.fd_time_step)
            sub.add_argument("--t-end", type=float, default=settings.fd_t_end)
            sub.add_argument("--stride", type=int, default=1)
        if name == "simulate":
            sub.add_argument("--h", choices=("profile", "zero"), default="profile")
    return parser


def parse_pairs(tokens: Sequence[str]) -> dict[str, float]:
    """``['--v', '1', '--a1=2']`` -> ``{'v': 1.0, 'a1': 2.0}``."""
    pairs: dict[str, float] = {}
    items = list(tokens)
    while items:
        token = items.pop(0)
        if not token.startswith("--") or len(token) == 2:
            raise UsageError(f"unexpected argument {token!r}")
        name, sep, value = token[2:].partition("=")
        if not sep:
            if not items:
                raise UsageError(f"parameter --{name} needs a value")
            value = items.pop(0)
        try:
            pairs[name] = float(value)
        except ValueError:
            raise UsageError(f"parameter --{name}: {value!r} is not a number") from None
    return pairs


def parse_perturbations(items: Sequence[str]) -> dict[str, float]:
    perturb: dict[str, float] = {}
    for item in items:
        name, sep, factor = item.partition("=")
        if not sep:
            raise UsageError(f"--perturb expects FIELD=FACTOR, got {item!r}")
        try:
            perturb[name.strip().lower()] = float(factor)
        except ValueError:
            raise UsageError(f"--perturb {item!r}: factor is not a number") from None
    return perturb


def parse_run_spec(argv: Sequence[str]) -> tuple[RunSpec, str]:
    """Parse ``argv`` into a validated ``RunSpec`` and the requested log level.

    Case names and parameter names are checked here, before any computation.
    """
    args, extras = build_parser().parse_known_args(list(argv))
    values = {
        key: value
        for key, value in vars(args).items()
        if key not in ("log_level", "perturb") and value is not None
    }
    values["params"] = parse_pairs(extras)
    values["perturb"] = parse_perturbations(getattr(args, "perturb", []))
    try:
        spec = RunSpec(**values)
    except ValidationError as exc:
        raise UsageError(_summarize(exc)) from None
    resolve_params(spec.case, spec.params)
    return spec, args.log_level


def _summarize(exc: ValidationError) -> str:
    return "; ".join(
        f"{'.'.join(str(p) for p in err['loc']) or 'arguments'}: {err['msg']}"
        for err in exc.errors()
    )


# ── Entry point ──────────────────────────────────────────────────────


def configure_logging(level: str) -> None:
    logging.config.dictConfig(LOGGING_CONFIG)
    setup_logging(level)


def emit(result: CommandResult, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(result.text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(result.text, encoding="utf-8")
    logger.info("Wrote %s", out)


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command; returns the process exit status."""
    argv = sys.argv[1:] if argv is None else argv
    try:
        spec, log_level = parse_run_spec(argv)
        configure_logging(log_level)
        logger.info("Running %s on case %s", spec.command, spec.case)
        result = COMMANDS[spec.command](spec)
        emit(result, spec.out)
    except (ParameterError, UnsupportedFormError) as exc:
        print(exc.one_line(), file=sys.stderr)
        return EXIT_USAGE
    except BeamSymError as exc:
        print(exc.one_line(), file=sys.stderr)
        return 1
    return result.exit_code
