"""Closed-form coefficient families with their generators and solutions.

Each constructor validates its parameters, builds the coefficients from
named ``Param`` nodes (so rendered formulas read like the table they come
from) and returns a ``CaseBundle``.
"""

from __future__ import annotations

import math

from beamsym.core.config import settings
from beamsym.core.errors import ConstraintViolationError, ParameterError
from beamsym.core.logging import get_logger
from beamsym.services.beam_model.beam import BeamConfig
from beamsym.services.beam_model.coefficients import (
    CoefficientFn,
    Const,
    Param,
    affine,
    coordinate,
    exp,
    sqrt,
)
from beamsym.services.beam_model.solution import ClosedFormSolution, TemporalFactor
from beamsym.services.catalog.bundle import CaseBundle
from beamsym.services.catalog.golden import certified_equations
from beamsym.services.symmetry.infinitesimals import Infinitesimals

logger = get_logger(__name__)

x = coordinate()


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterError(message)


def _params(**values: float) -> dict[str, Param]:
    return {name: Param(name, float(value)) for name, value in values.items()}


def temporal_for(
    s: float, a1: float, a2: float, zero_tol: float = settings.zero_separation_tolerance
) -> TemporalFactor:
    """The temporal factor solving F'' = s F with amplitudes ``a1``, ``a2``."""
    if s > zero_tol:
        return TemporalFactor.hyperbolic(math.sqrt(s), a1, a2)
    if s < -zero_tol:
        return TemporalFactor.trigonometric(math.sqrt(-s), a1, a2)
    return TemporalFactor.affine(a1, a2)


# ── Case a.1: EI ~ x^6 ───────────────────────────────────────────────


def case_a1(
    k: float = 1.0,
    f0: float = 1.0,
    T0: float = 1.0,
    m0: float = 1.0,
    c2: float = 0.0,
    omega: float = 0.0,
    A1: float = 1.0,
    A2: float = 1.0,
    *,
    domain: tuple[float, float] = (0.05, 1.0),
    enforce_constraints: bool = True,
) -> CaseBundle:
    """Sextic stiffness with quartic tension and ``u = exp(-2/x) F(t)``.

    The separation function of the profile is
    ``S(x) = (4 T0 - 2 k^3/f0^3) exp(4 c2/(k x)) / m0``, constant only when
    ``c2 = 0`` or ``2 f0^3 T0 = k^3``.  Then ``S = lambda^2`` with
    ``lambda^2 = 2 (2 f0^3 T0 - k^3) / (f0^3 m0)``; a negative value switches
    the temporal factor to the oscillatory pair.

    Raises:
        ParameterError: ``k``, ``f0`` zero, ``m0 <= 0`` or ``x_min <= 0``.
        ConstraintViolationError: ``c2 != 0`` off the balanced line, unless
            ``enforce_constraints`` is false.
    """
    _require(k != 0 and f0 != 0, "case a1 needs k != 0 and f0 != 0")
    _require(m0 > 0, f"case a1 needs m0 > 0, got {m0!r}")
    _require(domain[0] > 0, "case a1 is singular at x = 0; the domain must start at x_min > 0")

    p = _params(k=k, f0=f0, T0=T0, m0=m0, c2=c2, omega=omega)
    balance = 2.0 * f0**3 * T0 - k**3
    balanced = abs(balance) <= 1e-12 * max(abs(2.0 * f0**3 * T0), abs(k**3))
    notes: list[str] = []
    if c2 != 0 and not balanced:
        message = (
            f"case a1 separates only for c2 = 0 (or 2*f0**3*T0 = k**3); got c2={c2!r}, "
            f"2*f0**3*T0 - k**3 = {balance!r}"
        )
        if enforce_constraints:
            raise ConstraintViolationError(message)
        logger.warning("%s; building the bundle anyway", message)
        notes.append("c2 constraint not enforced: the solution is not exact")

    ei = p["k"] ** 3 * x**6 / (8 * p["f0"] ** 3)
    tension = p["T0"] * x**2 - 3 * p["k"] ** 3 * x**4 / (4 * p["f0"] ** 3)
    mass = p["m0"] * exp(-4 * p["c2"] / (p["k"] * x)) / x**2
    xi = p["k"] * x**2 / 2
    f1 = p["k"] - p["omega"] / 4

    lambda_squared = 2.0 * balance / (f0**3 * m0)
    temporal = temporal_for(lambda_squared, A1, A2)
    if lambda_squared < 0:
        logger.warning(
            "case a1: lambda^2 = %.6g < 0, using the oscillatory temporal factor", lambda_squared
        )
        notes.append("lambda^2 < 0: oscillatory regime cos/sin(sqrt(-lambda^2) t)")

    config = BeamConfig(ei=ei, m=mass, t=tension, domain=domain, label="case a1")
    solution = ClosedFormSolution(exp(-2 / x), temporal, domain=config.domain)
    inf = Infinitesimals(xi=xi, f1=f1, omega=omega)
    return CaseBundle(
        name="a1",
        config=config,
        inf=inf,
        solution=solution,
        params=dict(k=k, f0=f0, T0=T0, m0=m0, c2=c2, omega=omega, A1=A1, A2=A2),
        certified=certified_equations("a1"),
        metadata={"lambda_squared": lambda_squared, "regime": temporal.kind.value},
        notes=tuple(notes),
    )


# ── Case a.2: exponential stiffness, compressive load ────────────────


def admissible_r0(a0: float) -> tuple[float, float, float]:
    """Values of r0 for which ``exp(x/r0)`` is a static profile of case a2.

    With ``rho = 1/r0`` the profile condition reduces to
    ``rho (a0 + rho) (rho^2 + a0 rho + 2 a0^2 / 9) = 0``; ``rho = 0`` has no r0.
    """
    _require(a0 != 0, "case a2 needs a0 != 0")
    return (-1.0 / a0, -3.0 / a0, -3.0 / (2.0 * a0))


def case_a2(
    a0: float = 1.0,
    a1: float = 1.0,
    f0: float = 1.0,
    m0: float = 1.0,
    c2: float = 0.0,
    omega: float = 0.0,
    r0: float = -3.0,
    A1: float = 1.0,
    A2: float = 1.0,
    *,
    domain: tuple[float, float] = (0.0, 1.0),
) -> CaseBundle:
    """Exponential stiffness with ``T = -(2/9) a0^2 EI`` and ``u = exp(x/r0)(A1 + A2 t)``.

    Raises:
        ParameterError: ``a0`` or ``f0`` zero, ``a1 <= 0`` or ``m0 <= 0``.
        ConstraintViolationError: ``r0`` outside ``admissible_r0(a0)``.
    """
    allowed = admissible_r0(a0)
    _require(a1 > 0, f"case a2 needs a1 > 0, got {a1!r}")
    _require(f0 != 0, "case a2 needs f0 != 0")
    _require(m0 > 0, f"case a2 needs m0 > 0, got {m0!r}")
    if not any(math.isclose(r0, r, rel_tol=1e-9) for r in allowed):
        raise ConstraintViolationError(
            f"case a2: r0={r0!r} is not admissible for a0={a0!r}; "
            f"admissible values are {', '.join(f'{r:.12g}' for r in allowed)}"
        )

    p = _params(a0=a0, a1=a1, f0=f0, m0=m0, c2=c2, r0=r0)
    growth = exp(p["a0"] * x)
    ei = p["a1"] * growth
    tension = -2 * p["a0"] ** 2 * p["a1"] * growth / 9
    mass = p["m0"] * exp(-2 * p["c2"] * exp(-p["a0"] * x / 3) / p["f0"] - p["a0"] * x / 3)
    xi = 3 * p["f0"] * exp(p["a0"] * x / 3) / p["a0"]

    config = BeamConfig(ei=ei, m=mass, t=tension, domain=domain, label="case a2")
    solution = ClosedFormSolution(
        exp(x / p["r0"]), TemporalFactor.affine(A1, A2), domain=config.domain
    )
    return CaseBundle(
        name="a2",
        config=config,
        inf=Infinitesimals(xi=xi, f1=Const(0.0), omega=omega),
        solution=solution,
        params=dict(a0=a0, a1=a1, f0=f0, m0=m0, c2=c2, omega=omega, r0=r0, A1=A1, A2=A2),
        certified=certified_equations("a2"),
        metadata={"compressive": True, "admissible_r0": ",".join(f"{r:.12g}" for r in allowed)},
        notes=("T < 0 on the whole domain: compressive axial load",),
    )


# ── Case b: decaying exponential stiffness ───────────────────────────


def case_b(
    v: float = 1.0,
    a1: float = 1.0,
    m0: float = 1.0,
    c2: float = 0.0,
    omega: float = 0.0,
    A1: float = 1.0,
    A2: float = 1.0,
    *,
    domain: tuple[float, float] = (0.0, 1.0),
) -> CaseBundle:
    """``EI = a1 exp(-v x)``, ``T = 2 a1 v^2 exp(-v x)``, ``u = exp(2 v x)(A1 + A2 t)``.

    Both ``(EI u'')''`` and ``(T u')'`` equal ``4 a1 v^4 exp(v x) F(t)``.
    """
    _require(v != 0, "case b needs v != 0")
    _require(a1 > 0, f"case b needs a1 > 0, got {a1!r}")
    _require(m0 > 0, f"case b needs m0 > 0, got {m0!r}")

    p = _params(v=v, a1=a1, m0=m0, c2=c2)
    decay = exp(-p["v"] * x)
    config = BeamConfig(
        ei=p["a1"] * decay,
        m=p["m0"] * exp(p["v"] * (-4 * p["c2"] * decay - 5 * x)),
        t=2 * p["a1"] * p["v"] ** 2 * decay,
        domain=domain,
        label="case b",
    )
    growth = exp(p["v"] * x)
    inf = Infinitesimals(xi=growth / (2 * p["v"] ** 2), f1=growth / p["v"], omega=omega)
    solution = ClosedFormSolution(
        exp(2 * p["v"] * x), TemporalFactor.affine(A1, A2), domain=config.domain
    )
    return CaseBundle(
        name="b",
        config=config,
        inf=inf,
        solution=solution,
        params=dict(v=v, a1=a1, m0=m0, c2=c2, omega=omega, A1=A1, A2=A2),
        certified=certified_equations("b"),
        metadata={"separation_constant": 0.0},
    )


# ── Case c: power-law stiffness ──────────────────────────────────────


def case_c(
    a0: float = 1.0,
    a1: float = 1.0,
    n: float = 4.0,
    T1: float = 1.0,
    f0: float = 1.0,
    omega: float = 2.0,
    m0: float = 1.0,
    A1: float = 0.0,
    A2: float = 0.0,
    A3: float = 1.0,
    *,
    domain: tuple[float, float] = (0.0, 1.0),
) -> CaseBundle:
    """``EI = (a0 + a1 x)^n`` with ``u = 2 t + G(x)``.

    Every term of G is a power ``w^q`` of ``w = a0 + a1 x`` with
    ``q = 3 - n`` or ``q = (3 - n)/2 -+ sqrt((n-1)^2 + 4 T1/(a1^3 (n-2)))/2``,
    the roots for which ``(EI G'')'' = (T G')'``.

    Raises:
        ParameterError: ``n <= 3`` or non-integer, ``a1 <= 0``, ``f0 = 0``,
            ``w <= 0`` on the domain or a complex exponent.
        ConstraintViolationError: A vanishing denominator in G.
    """
    _require(float(n).is_integer() and n > 3, f"case c needs an integer n > 3, got {n!r}")
    _require(a1 > 0, f"case c needs a1 > 0 (G contains a1**1.5 and sqrt(a1)), got {a1!r}")
    _require(f0 != 0, "case c needs f0 != 0")
    _require(m0 > 0, f"case c needs m0 > 0, got {m0!r}")
    _require(
        min(a0 + a1 * domain[0], a0 + a1 * domain[1]) > 0,
        f"case c needs a0 + a1*x > 0 on {list(domain)}",
    )
    radicand = a1**3 * (n - 2) * (n - 1) ** 2 + 4 * T1
    _require(radicand >= 0, f"case c needs a1**3*(n-2)*(n-1)**2 + 4*T1 >= 0, got {radicand!r}")
    base = a1**1.5 * (n - 3) * math.sqrt(n - 2)
    root = math.sqrt(radicand)
    for sign, den in (("+", base + root), ("-", base - root)):
        if abs(den) <= 1e-12 * max(abs(base), root):
            raise ConstraintViolationError(
                f"case c: singular parameters, a1**1.5*(n-3)*sqrt(n-2) {sign} "
                f"sqrt(a1**3*(n-2)*(n-1)**2 + 4*T1) vanishes"
            )

    p = _params(a0=a0, a1=a1, n=n, T1=T1, f0=f0, omega=omega, m0=m0, A1=A1, A2=A2, A3=A3)
    w = affine(p["a0"], p["a1"])
    sqrt_r = sqrt(p["a1"] ** 3 * (p["n"] - 2) * (p["n"] - 1) ** 2 + 4 * p["T1"])
    scale = p["a1"] ** 1.5 * sqrt(p["n"] - 2)
    lead = scale * (p["n"] - 3)
    q_minus = (-sqrt_r / scale + p["n"] + 3) / 2
    q_plus = (sqrt_r / scale + p["n"] + 3) / 2
    amplitude = -2 * sqrt(p["a1"]) * sqrt(p["n"] - 2)
    g: CoefficientFn = w ** (-p["n"]) * (
        amplitude * p["A1"] * w**q_minus / (lead + sqrt_r)
        + amplitude * p["A2"] * w**q_plus / (lead - sqrt_r)
        - p["A3"] * w**3 / (p["a1"] * (p["n"] - 3))
    )

    config = BeamConfig(
        ei=w ** p["n"],
        m=p["m0"] * w ** ((p["f0"] * (p["n"] - 4) + p["n"] * p["omega"]) / p["f0"]),
        t=p["T1"] * w ** (p["n"] - 2) / (p["a1"] * (p["n"] - 2)),
        domain=domain,
        label="case c",
    )
    solution = ClosedFormSolution(
        g, TemporalFactor.affine(1.0, 0.0), offset_slope=2.0, domain=config.domain
    )
    inf = Infinitesimals(xi=w / (p["a1"] * p["n"]), f1=Const(0.0), omega=omega)
    return CaseBundle(
        name="c",
        config=config,
        inf=inf,
        solution=solution,
        params=dict(a0=a0, a1=a1, n=n, T1=T1, f0=f0, omega=omega, m0=m0, A1=A1, A2=A2, A3=A3),
        certified=certified_equations("c"),
        metadata={
            "exponent_minus": (3 - n) / 2 - root / (2 * a1**1.5 * math.sqrt(n - 2)),
            "exponent_plus": (3 - n) / 2 + root / (2 * a1**1.5 * math.sqrt(n - 2)),
            "exponent_a3": 3 - n,
        },
        notes=("u = 2*t + G(x): not a product solution, so no separation constant",),
    )
