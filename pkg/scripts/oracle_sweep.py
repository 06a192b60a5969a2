#!/usr/bin/env python3
"""
Regenerate the certified-equation manifest (beamsym/data/certified_equations.json).

For every catalog case at its default parameters the informative
determining equations R5..R9 are rebuilt with sympy from the case's
coefficient trees and judged in three stages:

  1. simplify with the parameters kept symbolic (an identity for the family),
  2. simplify after substituting the exact binary values of the parameters,
  3. sample at 50 significant digits with mpmath and compare against the
     largest term.

R1..R4, R10 and R11 vanish by the shape of the generator.  Constraints and
notes already in the manifest are carried over untouched.

Usage:
    python scripts/oracle_sweep.py           # rewrite the manifest
    python scripts/oracle_sweep.py --check   # exit 1 if the manifest is stale
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

import mpmath
import sympy

from beamsym.core.config import settings
from beamsym.services.beam_model.coefficients import X_SYMBOL
from beamsym.services.catalog import CASES, CaseBundle, build_case
from beamsym.services.symmetry.determining import LABELS

# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------
PROJECT_ROOT = Path(__file__).resolve().parent.parent
MANIFEST_PATH = PROJECT_ROOT / "beamsym" / "data" / "certified_equations.json"

DIGITS = 50
RELATIVE_ZERO = mpmath.mpf(10) ** -30
SAMPLE_POINTS = 8
U_CYCLE = (0, 1, -1, 10, -10)
STRUCTURAL = ("R1", "R2", "R3", "R4", "R10", "R11")

U = sympy.Symbol("u")


# ---------------------------------------------------------------------------
# Symbolic determining equations
# ---------------------------------------------------------------------------


def _derivatives(expr: sympy.Expr, order: int) -> list[sympy.Expr]:
    return [sympy.diff(expr, X_SYMBOL, k) for k in range(order + 1)]


def equation_terms(bundle: CaseBundle, symbolic: bool) -> dict[str, list[sympy.Expr]]:
    """R5..R9 of ``bundle`` as lists of additive sympy terms."""
    config, inf = bundle.config, bundle.inf
    E, dE, ddE, dddE = _derivatives(config.ei.to_sympy(symbolic), 3)
    m, dm = _derivatives(config.m.to_sympy(symbolic), 1)
    T, dT, ddT = _derivatives(config.t.to_sympy(symbolic), 2)
    xi, dxi, ddxi, dddxi, ddddxi = _derivatives(inf.xi.to_sympy(symbolic), 4)
    _, df1, ddf1, dddf1, ddddf1 = _derivatives(inf.f1.to_sympy(symbolic), 4)
    tau_t = sympy.Rational(inf.omega) / 2

    return {
        "R5": [
            -dT * df1 * U,
            -T * ddf1 * U,
            ddE * ddf1 * U,
            2 * dE * dddf1 * U,
            E * ddddf1 * U,
        ],
        "R6": [
            -2 * xi * dE**2 / E,
            2 * xi * ddE,
            2 * dE * dxi,
            4 * E * df1,
            -6 * E * ddxi,
        ],
        "R7": [
            T * xi * dE / E,
            -xi * dT,
            -xi * dE * ddE / E,
            xi * dddE,
            -2 * T * dxi,
            2 * ddE * dxi,
            6 * dE * df1,
            6 * dE * ddxi,
            6 * E * ddf1,
            4 * E * dddxi,
        ],
        "R8": [
            dT * xi * dE / E,
            -ddT * xi,
            -3 * dT * dxi,
            -2 * T * df1,
            2 * ddE * df1,
            T * ddxi,
            -E * ddxi,
            6 * dE * ddf1,
            -2 * dE * dddxi,
            4 * E * dddf1,
            E * ddddxi,
        ],
        "R9": [-m * xi * dE / E, xi * dm, -2 * m * tau_t, 4 * dxi],
    }


def exact_values(bundle: CaseBundle) -> dict[sympy.Symbol, sympy.Rational]:
    """Every named parameter of the bundle's trees as an exact rational."""
    found: dict[str, float] = {}
    for fn in (bundle.config.ei, bundle.config.m, bundle.config.t, bundle.inf.xi, bundle.inf.f1):
        found.update(fn.parameters())
    return {sympy.Symbol(name): sympy.Rational(value) for name, value in found.items()}


def _vanishes(terms: list[sympy.Expr]) -> bool:
    try:
        return sympy.simplify(sympy.Add(*terms)) == 0
    except (TypeError, ValueError, NotImplementedError):
        return False


def sampled_relative(bundle: CaseBundle, terms: list[sympy.Expr]) -> mpmath.mpf:
    """Worst ``|sum| / max |term|`` over interior points, at ``DIGITS`` digits."""
    x_min, length = bundle.config.domain
    funcs = [sympy.lambdify((X_SYMBOL, U), term, modules="mpmath") for term in terms]
    worst = mpmath.mpf(0)
    with mpmath.workdps(DIGITS):
        for k in range(SAMPLE_POINTS):
            xv = mpmath.mpf(x_min) + (mpmath.mpf(length) - x_min) * (k + mpmath.mpf(1) / 2) / SAMPLE_POINTS
            uv = U_CYCLE[k % len(U_CYCLE)]
            values = [mpmath.mpf(f(xv, uv)) for f in funcs]
            scale = max(abs(v) for v in values)
            if scale > 0:
                worst = max(worst, abs(mpmath.fsum(values)) / scale)
    return worst


def sweep_case(name: str) -> dict[str, Any]:
    bundle = build_case(name)
    generic = equation_terms(bundle, symbolic=True)
    substitution = exact_values(bundle)
    certified = list(STRUCTURAL)
    failing: list[str] = []
    for label, terms in generic.items():
        if _vanishes(terms):
            verdict = "identity"
        else:
            exact = [sympy.sympify(term).subs(substitution) for term in terms]
            if _vanishes(exact):
                verdict = "exact"
            else:
                relative = sampled_relative(bundle, exact)
                verdict = "sampled" if relative <= RELATIVE_ZERO else f"fails ({mpmath.nstr(relative, 3)})"
        (certified if not verdict.startswith("fails") else failing).append(label)
        print(f"     {label}: {verdict}")
    order = {label: index for index, label in enumerate(LABELS)}
    return {
        "params": dict(bundle.params),
        "certified": sorted(certified, key=order.__getitem__),
        "failing": sorted(failing, key=order.__getitem__),
    }


# ---------------------------------------------------------------------------
# Main
# ---------------------------------------------------------------------------


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    parser.add_argument("--check", action="store_true", help="compare instead of writing")
    args = parser.parse_args(argv)

    previous = json.loads(MANIFEST_PATH.read_text(encoding="utf-8"))
    print("=" * 70)
    print("beamsym: certified-equation oracle sweep")
    print(f"Precision: {DIGITS} digits, relative zero below {mpmath.nstr(RELATIVE_ZERO, 3)}")
    print("=" * 70)

    cases: dict[str, Any] = {}
    for index, name in enumerate(CASES, start=1):
        print(f"\n[{index}/{len(CASES)}] Case {name}")
        entry = sweep_case(name)
        kept = previous.get("cases", {}).get(name, {})
        for key in ("constraints", "notes"):
            if key in kept:
                entry[key] = kept[key]
        cases[name] = entry

    manifest = {
        "generated_by": "scripts/oracle_sweep.py",
        "tolerance": settings.determining_tolerance,
        "samples": settings.certify_samples,
        "seed": settings.sample_seed,
        "cases": cases,
    }

    stale = [
        name
        for name, entry in cases.items()
        if entry["certified"] != previous.get("cases", {}).get(name, {}).get("certified")
    ]
    print("\n" + "=" * 70)
    if args.check:
        if stale:
            print(f"STALE: certified lists differ for {', '.join(stale)}")
            return 1
        print("Manifest is up to date")
        return 0

    MANIFEST_PATH.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    print(f"Wrote {MANIFEST_PATH.relative_to(PROJECT_ROOT)} ({len(cases)} cases)")
    if stale:
        print(f"  changed: {', '.join(stale)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
