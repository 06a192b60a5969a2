"""The clamped-free boundary-value family.

With ``m(x) = m0 + m1 x + m2 x^2`` and ``P = integral_0^x m = m0 x + m1 x^2/2 +
m2 x^3/3`` the profile is ``phi = P^2``, so ``phi(0) = phi'(0) = 0`` holds
identically.  The free-end conditions ``phi''(1) = phi'''(1) = 0`` read

    m(1)^2 + P(1) m'(1) = 0,        3 m(1) m'(1) + 2 P(1) m2 = 0

and fix m1 and m2 in terms of m0.  Stiffness and tension are then chosen
so that ``-L[phi] / (m phi) = -nu^2`` with ``nu^2 = 43200 g1``.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import optimize

from beamsym.core.errors import ParameterError
from beamsym.core.logging import get_logger
from beamsym.services.beam_model.beam import BeamConfig
from beamsym.services.beam_model.coefficients import Param, check_positive, coordinate
from beamsym.services.beam_model.solution import ClosedFormSolution, TemporalFactor
from beamsym.services.catalog.bundle import CaseBundle
from beamsym.services.catalog.golden import certified_equations
from beamsym.services.symmetry.infinitesimals import Infinitesimals

logger = get_logger(__name__)

x = coordinate()

FREQUENCY_FACTOR = 43200.0


def bvp_masses(m0: float) -> tuple[float, float]:
    """m1 from its closed form, m2 as the positive root of the moment condition."""
    if m0 <= 0:
        raise ParameterError(f"bvp case needs m0 > 0, got {m0!r}")
    s = np.cbrt(math.sqrt(6.0) * m0**3 + 9.0 * m0**3)
    m1 = s / (3.0 ** (2.0 / 3.0) * np.cbrt(5.0)) + np.cbrt(5.0 / 3.0) * m0**2 / s - 2.0 * m0
    alpha = m0 + m1
    beta = m0 + m1 / 2.0
    roots = np.roots([5.0 / 3.0, 2.0 * alpha + 2.0 * beta + m1 / 3.0, alpha**2 + beta * m1])
    positive = [float(r.real) for r in roots if abs(r.imag) < 1e-12 and r.real > 0]
    if not positive:
        raise ParameterError(f"bvp case has no positive m2 for m0={m0!r}")
    return float(m1), max(positive)


def free_end_defects(m0: float, m1: float, m2: float) -> tuple[float, float]:
    """The two free-end identities evaluated at x = 1."""
    mass = m0 + m1 + m2
    slope = m1 + 2.0 * m2
    primitive = m0 + m1 / 2.0 + m2 / 3.0
    return (mass**2 + primitive * slope, 3.0 * mass * slope + 2.0 * primitive * m2)


def bvp_masses_by_root_finding(m0: float) -> tuple[float, float]:
    """Solve the free-end identities directly (independent check of ``bvp_masses``)."""
    guess = np.array([-0.84 * m0, 0.28 * m0])
    solution, info, status, message = optimize.fsolve(
        lambda v: free_end_defects(m0, v[0], v[1]), guess, xtol=1e-14, full_output=True
    )
    if status != 1:
        raise ParameterError(f"free-end root finding failed for m0={m0!r}: {message}")
    return float(solution[0]), float(solution[1])


def bvp_case(
    m0: float = 1.0,
    g1: float = 1.0 / 3000.0,
    omega: float = 2.0,
    A1: float = 1.0,
    A2: float = 0.0,
    *,
    g0: float = 1.0,
    c1: float = 1.0,
) -> CaseBundle:
    """Cantilever with quadratic mass and ``u = P(x)^2 (A1 cos(nu t) + A2 sin(nu t))``.

    ``g0`` is carried as metadata only; no formula depends on it.

    Raises:
        ParameterError: ``m0 <= 0``, ``g1 <= 0`` or ``m(x) <= 0`` on [0, 1].
    """
    if g1 <= 0:
        raise ParameterError(f"bvp case needs g1 > 0, got {g1!r}")
    m1, m2 = bvp_masses(m0)
    nu_squared = FREQUENCY_FACTOR * g1
    nu = math.sqrt(nu_squared)

    pm0, pm1, pm2 = Param("m0", m0), Param("m1", m1), Param("m2", m2)
    pg1, pnu2 = Param("g1", g1), Param("nu2", nu_squared)
    mass = pm0 + pm1 * x + pm2 * x**2
    dmass = pm1 + 2 * pm2 * x
    primitive = pm0 * x + pm1 * x**2 / 2 + pm2 * x**3 / 3

    ei = 1296 * pg1 * primitive**4 / mass**3
    bracket = (
        4 * mass**4
        + 4 * primitive * dmass * mass**2
        + 2 * pm2 * primitive**2 * mass
        - 3 * primitive**2 * dmass**2
    )
    tension = 1296 * pg1 * primitive**2 * bracket / mass**5 - pnu2 * primitive**2 / (6 * mass)

    domain = (0.0, 1.0)
    bad = check_positive(mass, domain)
    if bad or mass.value(domain[1]) <= 0:
        raise ParameterError(f"bvp case: m(x) must stay positive on [0, 1] (m0={m0!r})")

    config = BeamConfig(ei=ei, m=mass, t=tension, domain=domain, label="case bvp")
    solution = ClosedFormSolution(
        primitive**2, TemporalFactor.trigonometric(nu, A1, A2), domain=domain
    )
    inf = Infinitesimals(xi=primitive / mass, f1=Param("omega", omega), omega=0.0, t0=c1)
    logger.info("bvp case: m1=%.6f m2=%.6f nu=%.6f", m1, m2, nu)
    return CaseBundle(
        name="bvp",
        config=config,
        inf=inf,
        solution=solution,
        params=dict(m0=m0, g1=g1, omega=omega, A1=A1, A2=A2),
        certified=certified_equations("bvp"),
        metadata={
            "m1": m1,
            "m2": m2,
            "nu": nu,
            "separation_constant": -nu_squared,
            "g0": g0,
            "xi_free_end": inf.xi.value(1.0),
        },
        notes=("xi(1) != 0: the free end is not left invariant by the generator",),
    )
