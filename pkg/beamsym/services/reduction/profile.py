"""Invariant profiles from the characteristic equation dx/xi = du/(A u).

Integrating gives ``phi(x) = exp(integral_{x0}^{x} A/xi ds)`` normalized so
``phi(x0) = 1``.  The antiderivative is taken in closed form when A/xi is a
polynomial, a Laurent monomial or an exponential of a linear function;
otherwise the profile is an exponential of a quadrature node, which keeps
exact derivative slots.
"""

from __future__ import annotations

import math

import numpy as np
import sympy
from scipy import integrate

from beamsym.core.config import settings
from beamsym.core.errors import (
    EvaluationError,
    ParameterError,
    SingularCharacteristicError,
    UnsupportedFormError,
)
from beamsym.core.logging import get_logger
from beamsym.services.beam_model.coefficients import (
    CoefficientFn,
    Exp,
    Neg,
    TailIntegral,
    X_SYMBOL,
    from_sympy,
)

logger = get_logger(__name__)

_PATH_SAMPLES = 65


def _is_recognized(expr: sympy.Expr) -> bool:
    if expr.is_polynomial(X_SYMBOL):
        return True
    numer, denom = sympy.fraction(sympy.together(expr))
    if numer.is_polynomial(X_SYMBOL) and denom.is_polynomial(X_SYMBOL):
        return len(sympy.Poly(denom, X_SYMBOL).terms()) == 1
    factors = sympy.Mul.make_args(expr)
    for factor in factors:
        if X_SYMBOL not in factor.free_symbols:
            continue
        if not isinstance(factor, sympy.exp):
            return False
        arg = factor.args[0]
        if not (arg.is_polynomial(X_SYMBOL) and sympy.degree(arg, X_SYMBOL) <= 1):
            return False
    return True


def closed_form_antiderivative(xi: CoefficientFn, a: CoefficientFn) -> sympy.Expr | None:
    """``integral A/xi dx`` via sympy, or None outside the recognized family."""
    integrand = sympy.simplify(a.to_sympy() / xi.to_sympy())
    if not _is_recognized(integrand):
        return None
    primitive = sympy.integrate(integrand, X_SYMBOL)
    if primitive.has(sympy.Integral):
        return None
    return primitive


def check_path(xi: CoefficientFn, lo: float, hi: float, include_ends: bool = True) -> None:
    """Raise if xi vanishes or changes sign between ``lo`` and ``hi``."""
    lo, hi = min(lo, hi), max(lo, hi)
    points = np.linspace(lo, hi, _PATH_SAMPLES)
    if not include_ends:
        points = points[1:-1]
    try:
        values = np.array([xi.value(float(p)) for p in points])
    except EvaluationError as exc:
        raise SingularCharacteristicError(f"xi is not evaluable on [{lo!r}, {hi!r}]: {exc}") from exc
    if np.any(values == 0) or np.any(np.sign(values) != np.sign(values[0])):
        where = float(points[int(np.argmax(np.sign(values) != np.sign(values[0])))])
        raise SingularCharacteristicError(
            f"xi vanishes on the characteristic path [{lo!r}, {hi!r}] near x={where!r}"
        )


def invariant_profile_fn(
    xi: CoefficientFn,
    a: CoefficientFn,
    x0: float,
    domain: tuple[float, float] | None = None,
    tol: float = settings.quadrature_tolerance,
) -> CoefficientFn:
    """The invariant profile as a coefficient function.

    Args:
        xi: Spatial infinitesimal.
        a: Coefficient of u in eta (``f1 + omega/4``).
        x0: Normalization point; ``math.inf`` uses the limit of the
            closed-form antiderivative.
        domain: Interval on which xi must not vanish (open ends allowed).
        tol: Quadrature tolerance for the fallback.

    Raises:
        SingularCharacteristicError: xi vanishes inside ``domain``.
        ParameterError: ``x0 = inf`` without a finite closed-form limit.
    """
    if domain is not None:
        check_path(xi, domain[0], domain[1], include_ends=False)

    primitive = closed_form_antiderivative(xi, a)
    if primitive is not None:
        if math.isinf(x0):
            anchor = sympy.limit(primitive, X_SYMBOL, sympy.oo if x0 > 0 else -sympy.oo)
            if not anchor.is_finite:
                raise ParameterError("antiderivative has no finite limit at infinity")
        else:
            anchor = primitive.subs(X_SYMBOL, x0)
        try:
            profile = from_sympy(sympy.exp(primitive - anchor))
        except UnsupportedFormError:
            profile = None
        if profile is not None:
            logger.debug("Closed-form profile %s", profile.render())
            return profile

    if math.isinf(x0):
        raise ParameterError("normalization at infinity needs a closed-form antiderivative")
    logger.debug("Profile of %s / %s by quadrature", a.render(), xi.render())
    return Exp(Neg(TailIntegral(a / xi, float(x0), tol)))


def invariant_profile(
    xi: CoefficientFn,
    a: CoefficientFn,
    x0: float,
    x: float,
    tol: float = settings.quadrature_tolerance,
) -> float:
    """``phi(x)`` with ``phi(x0) = 1``.

    Raises:
        SingularCharacteristicError: xi vanishes on ``[x0, x]``.
    """
    if math.isinf(x0):
        return invariant_profile_fn(xi, a, x0, tol=tol).value(x)
    check_path(xi, x0, x)
    primitive = closed_form_antiderivative(xi, a)
    if primitive is not None:
        exponent = float(primitive.subs(X_SYMBOL, x) - primitive.subs(X_SYMBOL, x0))
        return math.exp(exponent)
    exponent, _ = integrate.quad(
        lambda s: a.value(s) / xi.value(s), x0, x, epsabs=tol, epsrel=tol, limit=200
    )
    return math.exp(exponent)
