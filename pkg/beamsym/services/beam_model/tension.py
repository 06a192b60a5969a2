"""Axial load builders: rotating blades, hanging beams and stiff strings.

Rotating and gravity loads are tail integrals of the mass distribution,

    T(x) = integral_x^l m(s) Omega^2 s ds      (rotating)
    T(x) = integral_x^l m(s) g ds              (gravity)

so T(l) = 0.  Polynomial mass gives a closed-form polynomial; anything
else falls back to adaptive quadrature when ``mode="auto"``.
"""

from __future__ import annotations

from enum import Enum

import numpy as np
from numpy.polynomial import polynomial as npoly

from beamsym.core.config import settings
from beamsym.core.errors import ParameterError, UnsupportedFormError
from beamsym.core.logging import get_logger
from beamsym.services.beam_model.coefficients import (
    CoefficientFn,
    Const,
    Coordinate,
    Neg,
    Polynomial,
    Sum,
    TailIntegral,
    polynomial_coefficients,
)

logger = get_logger(__name__)


class TensionKind(str, Enum):
    ROTATING = "rotating"
    GRAVITY = "gravity"
    CONSTANT = "constant"


class IntegrationMode(str, Enum):
    CLOSED = "closed"
    AUTO = "auto"


def build_tension(
    kind: TensionKind | str,
    m: CoefficientFn,
    param: float,
    length: float,
    mode: IntegrationMode | str = IntegrationMode.AUTO,
) -> CoefficientFn:
    """Build T(x) for the given load kind.

    Args:
        kind: ``rotating`` (param = Omega), ``gravity`` (param = g) or
            ``constant`` (param = T0).
        m: Mass per unit length.
        param: Rotating speed, gravitational acceleration or constant tension.
        length: Beam length l; the free end where T vanishes.
        mode: ``closed`` demands a polynomial mass; ``auto`` falls back to
            quadrature.

    Returns:
        The tension as a coefficient function.

    Raises:
        ParameterError: Unknown kind or mode.
        UnsupportedFormError: Non-polynomial mass in ``closed`` mode.
    """
    try:
        kind = TensionKind(kind)
        mode = IntegrationMode(mode)
    except ValueError as exc:
        raise ParameterError(str(exc)) from exc

    if kind is TensionKind.CONSTANT:
        return Const(float(param))

    if kind is TensionKind.ROTATING:
        weight = np.array([0.0, float(param) ** 2])
        integrand = m * Coordinate() * float(param) ** 2
    else:
        weight = np.array([float(param)])
        integrand = m * float(param)

    coeffs = polynomial_coefficients(m)
    if coeffs is None:
        if mode is IntegrationMode.CLOSED:
            raise UnsupportedFormError(
                f"closed-form {kind.value} tension needs a polynomial mass, got {m.render()}"
            )
        logger.info("Non-polynomial mass %s: %s tension by quadrature", m.render(), kind.value)
        return TailIntegral(integrand, float(length), settings.quadrature_tolerance)

    antiderivative = Polynomial(tuple(float(c) for c in npoly.polyint(npoly.polymul(coeffs, weight))))
    # Evaluating the same node at l makes T(l) cancel exactly.
    return Sum((Const(antiderivative.value(float(length))), Neg(antiderivative)))
