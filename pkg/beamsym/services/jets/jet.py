"""Fixed-order jets: every partial derivative up to order 4 in x and 2 in t.

A ``Jet`` stores raw partial derivatives ``d^(i+j) f / dx^i dt^j`` (not
Taylor coefficients), so residual assembly can read slots directly.
Products use the bivariate Leibniz rule with integer binomial weights,
which keeps integer polynomial cases bit-exact.  Elementary functions
are applied by truncated Faa di Bruno composition

    f(a) = sum_k f^(k)(a0) / k! * (a - a0)^k,   k <= ORDER_X + ORDER_T

since every slot of ``(a - a0)^k`` vanishes once ``k`` exceeds the slot's
total order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from beamsym.core.errors import EvaluationError

ORDER_X = 4
ORDER_T = 2
SHAPE = (ORDER_X + 1, ORDER_T + 1)
MAX_TOTAL_ORDER = ORDER_X + ORDER_T

Scalar = Union[int, float]

# (i, j) -> [(p, q, C(i, p) * C(j, q)), ...]
_LEIBNIZ: dict[tuple[int, int], list[tuple[int, int, int]]] = {
    (i, j): [
        (p, q, math.comb(i, p) * math.comb(j, q))
        for p in range(i + 1)
        for q in range(j + 1)
    ]
    for i in range(ORDER_X + 1)
    for j in range(ORDER_T + 1)
}


@dataclass(frozen=True, eq=False)
class Jet:
    """Partial derivatives of a scalar field at one point of the (x, t) plane."""

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.coeffs, dtype=float)
        if arr.shape != SHAPE:
            raise ValueError(f"Jet needs {SHAPE} derivative slots, got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise EvaluationError("Jet contains non-finite derivative values")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    # ── Seeds ────────────────────────────────────────────────────────

    @classmethod
    def constant(cls, value: Scalar) -> "Jet":
        coeffs = np.zeros(SHAPE)
        coeffs[0, 0] = value
        return cls(coeffs)

    @classmethod
    def x(cls, x0: Scalar) -> "Jet":
        """The coordinate x seeded at ``x0``."""
        coeffs = np.zeros(SHAPE)
        coeffs[0, 0] = x0
        coeffs[1, 0] = 1.0
        return cls(coeffs)

    @classmethod
    def t(cls, t0: Scalar) -> "Jet":
        """The coordinate t seeded at ``t0``."""
        coeffs = np.zeros(SHAPE)
        coeffs[0, 0] = t0
        coeffs[0, 1] = 1.0
        return cls(coeffs)

    @classmethod
    def from_x_derivatives(cls, derivatives: Sequence[Scalar]) -> "Jet":
        """Jet of a function of x alone from ``f, f', f'', ...`` (missing = 0)."""
        coeffs = np.zeros(SHAPE)
        for i, d in enumerate(list(derivatives)[: ORDER_X + 1]):
            coeffs[i, 0] = d
        return cls(coeffs)

    @classmethod
    def from_t_derivatives(cls, derivatives: Sequence[Scalar]) -> "Jet":
        """Jet of a function of t alone from ``F, F', F''`` (missing = 0)."""
        coeffs = np.zeros(SHAPE)
        for j, d in enumerate(list(derivatives)[: ORDER_T + 1]):
            coeffs[0, j] = d
        return cls(coeffs)

    # ── Accessors ────────────────────────────────────────────────────

    @property
    def value(self) -> float:
        return float(self.coeffs[0, 0])

    def slot(self, i: int, j: int = 0) -> float:
        """The partial derivative of order ``i`` in x and ``j`` in t."""
        return float(self.coeffs[i, j])

    def x_derivatives(self) -> list[float]:
        return [float(v) for v in self.coeffs[:, 0]]

    def t_derivatives(self) -> list[float]:
        return [float(v) for v in self.coeffs[0, :]]

    def restrict_x(self) -> "Jet":
        """Drop every slot that involves a t-derivative."""
        return Jet.from_x_derivatives(self.x_derivatives())

    def allclose(self, other: "Jet", rtol: float = 1e-12, atol: float = 0.0) -> bool:
        return bool(np.allclose(self.coeffs, other.coeffs, rtol=rtol, atol=atol))

    def __repr__(self) -> str:
        return f"Jet(value={self.value!r}, x={self.x_derivatives()!r})"

    # ── Arithmetic ───────────────────────────────────────────────────

    def __add__(self, other: Union["Jet", Scalar]) -> "Jet":
        if isinstance(other, Jet):
            return Jet(self.coeffs + other.coeffs)
        coeffs = self.coeffs.copy()
        coeffs[0, 0] += other
        return Jet(coeffs)

    __radd__ = __add__

    def __neg__(self) -> "Jet":
        return Jet(-self.coeffs)

    def __sub__(self, other: Union["Jet", Scalar]) -> "Jet":
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Jet":
        return (-self) + other

    def __mul__(self, other: Union["Jet", Scalar]) -> "Jet":
        if isinstance(other, Jet):
            return jet_mul(self, other)
        return _checked(self.coeffs * other, "scalar multiply")

    __rmul__ = __mul__

    def __truediv__(self, other: Union["Jet", Scalar]) -> "Jet":
        if isinstance(other, Jet):
            return jet_div(self, other)
        if other == 0:
            raise EvaluationError("jet division by the scalar 0")
        return _checked(self.coeffs / other, "scalar divide")

    def __rtruediv__(self, other: Scalar) -> "Jet":
        return jet_div(Jet.constant(other), self)

    def __pow__(self, p: Scalar) -> "Jet":
        return jet_pow(self, p)


def _checked(coeffs: np.ndarray, primitive: str, point: float | None = None) -> Jet:
    if not np.all(np.isfinite(coeffs)):
        where = f" at value {point!r}" if point is not None else ""
        raise EvaluationError(f"{primitive} overflowed to non-finite values{where}")
    return Jet(coeffs)


def jet_mul(a: Jet, b: Jet) -> Jet:
    """Pointwise product by the Leibniz rule over both variables."""
    ac, bc = a.coeffs, b.coeffs
    out = np.zeros(SHAPE)
    with np.errstate(over="ignore", invalid="ignore"):
        for (i, j), terms in _LEIBNIZ.items():
            total = 0.0
            for p, q, w in terms:
                total += w * ac[p, q] * bc[i - p, j - q]
            out[i, j] = total
    return _checked(out, "jet_mul")


def _compose(a: Jet, derivatives: Sequence[float], primitive: str) -> Jet:
    """Apply f given ``f^(k)(a0)`` for k = 0..MAX_TOTAL_ORDER."""
    shift = a.coeffs.copy()
    shift[0, 0] = 0.0
    d = Jet(shift)
    out = np.zeros(SHAPE)
    out[0, 0] = derivatives[0]
    power = Jet.constant(1.0)
    for k in range(1, MAX_TOTAL_ORDER + 1):
        power = jet_mul(power, d)
        if derivatives[k] != 0.0:
            with np.errstate(over="ignore", invalid="ignore"):
                out += derivatives[k] / math.factorial(k) * power.coeffs
    return _checked(out, primitive, a.value)


def jet_exp(a: Jet) -> Jet:
    e = math.exp(a.value) if a.value < 709.0 else math.inf
    if not math.isfinite(e):
        raise EvaluationError(f"jet_exp overflowed at value {a.value!r}")
    return _compose(a, [e] * (MAX_TOTAL_ORDER + 1), "jet_exp")


def jet_ln(a: Jet) -> Jet:
    a0 = a.value
    if a0 <= 0.0:
        raise EvaluationError(f"jet_ln requires a positive value, got {a0!r}")
    derivatives = [math.log(a0)] + [
        (-1.0) ** (k - 1) * math.factorial(k - 1) / a0**k
        for k in range(1, MAX_TOTAL_ORDER + 1)
    ]
    return _compose(a, derivatives, "jet_ln")


def _is_integer(p: float) -> bool:
    return float(p).is_integer()


def jet_pow(a: Jet, p: Scalar) -> Jet:
    """``a ** p`` for real ``p``.

    Non-integer exponents need a positive value; negative integers need a
    nonzero value; non-negative integers accept any value.
    """
    a0 = a.value
    integer = _is_integer(p)
    if not integer and a0 <= 0.0:
        raise EvaluationError(
            f"jet_pow with non-integer exponent {p!r} requires a positive value, "
            f"got {a0!r}"
        )
    if integer and p < 0 and a0 == 0.0:
        raise EvaluationError(f"jet_pow with exponent {p!r} at value 0")

    derivatives: list[float] = []
    falling = 1.0
    for k in range(MAX_TOTAL_ORDER + 1):
        if k > 0:
            falling *= p - (k - 1)
        if falling == 0.0:
            derivatives.append(0.0)
        elif integer:
            derivatives.append(falling * a0 ** int(p - k))
        else:
            derivatives.append(falling * a0 ** (p - k))
    return _compose(a, derivatives, "jet_pow")


def jet_sqrt(a: Jet) -> Jet:
    if a.value <= 0.0:
        raise EvaluationError(f"jet_sqrt requires a positive value, got {a.value!r}")
    return jet_pow(a, 0.5)


def _cyclic(a0: float, start: int) -> list[float]:
    cycle = [math.sin(a0), math.cos(a0), -math.sin(a0), -math.cos(a0)]
    return [cycle[(start + k) % 4] for k in range(MAX_TOTAL_ORDER + 1)]


def jet_sin(a: Jet) -> Jet:
    return _compose(a, _cyclic(a.value, 0), "jet_sin")


def jet_cos(a: Jet) -> Jet:
    return _compose(a, _cyclic(a.value, 1), "jet_cos")


def jet_div(a: Jet, b: Jet) -> Jet:
    if b.value == 0.0:
        raise EvaluationError("jet_div denominator has value 0")
    return jet_mul(a, jet_pow(b, -1))


