"""Point-symmetry generators of the beam equation.

The generator has the restricted shape

    v = xi(x) d/dx + tau(t) d/dt + eta(x, t, u) d/du
    tau(t) = omega t / 2 + t0
    eta    = (f1(x) + omega / 4) u + d1 + d2 t

so tau depends on t alone, xi on x alone and eta is affine in u.  These
dependencies are enforced by the types below rather than checked.
"""

from __future__ import annotations

from dataclasses import dataclass

from beamsym.services.beam_model.coefficients import CoefficientFn, Const, format_number
from beamsym.services.jets import Jet


@dataclass(frozen=True)
class Infinitesimals:
    """Components of a symmetry generator.

    Attributes:
        xi: Spatial component, a function of x only.
        f1: Spatial part of the u-coefficient of eta.
        omega: Time-scaling rate; tau = omega t / 2 + t0.
        t0: Time-translation component.
        d1: Constant part of the u-independent term of eta.
        d2: Rate of the u-independent term of eta.
    """

    xi: CoefficientFn
    f1: CoefficientFn = Const(0.0)
    omega: float = 0.0
    t0: float = 0.0
    d1: float = 0.0
    d2: float = 0.0

    def tau_jet(self, t: float) -> Jet:
        return Jet.t(t) * (self.omega / 2.0) + self.t0

    def u_coefficient(self) -> CoefficientFn:
        """A = f1 + omega/4 as a coefficient function."""
        return self.f1 + self.omega / 4.0 if self.omega else self.f1

    def u_coefficient_jet(self, x: float) -> Jet:
        """A = f1(x) + omega/4, the coefficient of u in eta."""
        return self.f1.jet(x) + self.omega / 4.0

    def offset_jet(self, t: float) -> Jet:
        """B = d1 + d2 t, the u-independent part of eta."""
        return Jet.t(t) * self.d2 + self.d1

    def eta(self, x: float, t: float, u: float) -> float:
        return self.u_coefficient_jet(x).value * u + self.offset_jet(t).value

    def render_tau(self) -> str:
        return f"{format_number(self.omega / 2.0)}*t + {format_number(self.t0)}"

    def render_eta(self) -> str:
        return (
            f"({self.f1.render()} + {format_number(self.omega / 4.0)})*u"
            f" + {format_number(self.d1)} + {format_number(self.d2)}*t"
        )

    def generator(self) -> str:
        """``v = xi d/dx + tau d/dt + eta d/du`` as text."""
        return (
            f"v = ({self.xi.render()})*d/dx + ({self.render_tau()})*d/dt"
            f" + ({self.render_eta()})*d/du"
        )
