"""Closed-form spatial coefficient functions as small expression trees.

Every node evaluates to a pure-x ``Jet`` (all t-slots zero), renders to a
sympy-parseable formula in which named parameters keep their names, and
converts to and from sympy.  Stiffness, mass and tension profiles of the
catalog families are all built from these nodes.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from tokenize import TokenError
from typing import Iterable, Mapping, Union

import numpy as np
import sympy
from numpy.polynomial import polynomial as npoly
from scipy import integrate
from sympy.parsing.sympy_parser import parse_expr
from sympy.polys.polyerrors import GeneratorsNeeded, PolynomialError

from beamsym.core.config import settings
from beamsym.core.errors import EvaluationError, ParameterError, UnsupportedFormError
from beamsym.services.jets import Jet, jet_exp, jet_ln, jet_pow

X_SYMBOL = sympy.Symbol("x")

Number = Union[int, float]

# Render precedence: sums bind loosest, function calls and symbols tightest.
_SUM, _PRODUCT, _UNARY, _POWER, _ATOM = 1, 2, 3, 4, 5


def format_number(value: float) -> str:
    """Shortest round-trip text for a float, without a trailing ``.0``."""
    text = repr(float(value))
    return text[:-2] if text.endswith(".0") else text


class CoefficientFn(ABC):
    """A closed-form function of x evaluable to a ``Jet``."""

    @abstractmethod
    def jet(self, x: float) -> Jet:
        """Derivatives up to fourth order at ``x`` (t-slots are zero)."""

    @abstractmethod
    def value(self, x: float) -> float:
        """Plain value at ``x``."""

    @abstractmethod
    def _render(self) -> tuple[str, int]:
        """Formula text and its precedence level."""

    @abstractmethod
    def to_sympy(self, symbolic: bool = False) -> sympy.Expr:
        """sympy expression in ``x``; parameters become symbols if ``symbolic``."""

    @abstractmethod
    def children(self) -> tuple["CoefficientFn", ...]:
        """Direct sub-expressions."""

    # ── Shared behaviour ─────────────────────────────────────────────

    def render(self) -> str:
        return self._render()[0]

    def __str__(self) -> str:
        return self.render()

    @property
    def is_constant(self) -> bool:
        return all(child.is_constant for child in self.children()) and not isinstance(
            self, (Coordinate, TailIntegral)
        )

    def parameters(self) -> dict[str, float]:
        """Named parameters appearing anywhere in the tree."""
        found: dict[str, float] = {}
        stack: list[CoefficientFn] = [self]
        while stack:
            node = stack.pop()
            if isinstance(node, Param):
                previous = found.setdefault(node.name, node.number)
                if previous != node.number:
                    raise ParameterError(
                        f"parameter {node.name!r} has two values: "
                        f"{previous!r} and {node.number!r}"
                    )
            stack.extend(node.children())
        return dict(sorted(found.items()))

    def sample(self, grid: Iterable[float]) -> list[Jet]:
        return sample_field(self, grid)

    # ── Operator overloads ───────────────────────────────────────────

    def __add__(self, other: "FnLike") -> "CoefficientFn":
        return Sum.of(self, as_fn(other))

    def __radd__(self, other: "FnLike") -> "CoefficientFn":
        return Sum.of(as_fn(other), self)

    def __sub__(self, other: "FnLike") -> "CoefficientFn":
        return Sum.of(self, Neg(as_fn(other)))

    def __rsub__(self, other: "FnLike") -> "CoefficientFn":
        return Sum.of(as_fn(other), Neg(self))

    def __mul__(self, other: "FnLike") -> "CoefficientFn":
        return Product.of(self, as_fn(other))

    def __rmul__(self, other: "FnLike") -> "CoefficientFn":
        return Product.of(as_fn(other), self)

    def __truediv__(self, other: "FnLike") -> "CoefficientFn":
        return Quotient(self, as_fn(other))

    def __rtruediv__(self, other: "FnLike") -> "CoefficientFn":
        return Quotient(as_fn(other), self)

    def __neg__(self) -> "CoefficientFn":
        return Neg(self)

    def __pow__(self, exponent: "FnLike") -> "CoefficientFn":
        return Power(self, as_fn(exponent))


FnLike = Union[CoefficientFn, int, float]


def as_fn(value: FnLike) -> CoefficientFn:
    if isinstance(value, CoefficientFn):
        return value
    return Const(float(value))


def _wrap(node: CoefficientFn, min_prec: int) -> str:
    text, prec = node._render()
    return f"({text})" if prec < min_prec else text


# ── Leaves ───────────────────────────────────────────────────────────


@dataclass(frozen=True)
class Const(CoefficientFn):
    number: float

    def jet(self, x: float) -> Jet:
        return Jet.constant(self.number)

    def value(self, x: float) -> float:
        return float(self.number)

    def _render(self) -> tuple[str, int]:
        text = format_number(self.number)
        return text, (_UNARY if self.number < 0 else _ATOM)

    def to_sympy(self, symbolic: bool = False) -> sympy.Expr:
        if float(self.number).is_integer():
            return sympy.Integer(int(self.number))
        return sympy.Float(self.number)

    def children(self) -> tuple[CoefficientFn, ...]:
        return ()


@dataclass(frozen=True)
class Param(CoefficientFn):
    """A named constant: evaluates to ``number``, renders as ``name``."""

    name: str
    number: float

    def jet(self, x: float) -> Jet:
        return Jet.constant(self.number)

    def value(self, x: float) -> float:
        return float(self.number)

    def _render(self) -> tuple[str, int]:
        return self.name, _ATOM

    def to_sympy(self, symbolic: bool = False) -> sympy.Expr:
        if symbolic:
            return sympy.Symbol(self.name)
        return Const(self.number).to_sympy()

    def children(self) -> tuple[CoefficientFn, ...]:
        return ()


@dataclass(frozen=True)
class Coordinate(CoefficientFn):
    """The spatial coordinate x."""

    def jet(self, x: float) -> Jet:
        return Jet.x(x)

    def value(self, x: float) -> float:
        return float(x)

    def _render(self) -> tuple[str, int]:
        return "x", _ATOM

    def to_sympy(self, symbolic: bool = False) -> sympy.Expr:
        return X_SYMBOL

    def children(self) -> tuple[CoefficientFn, ...]:
        return ()


@dataclass(frozen=True)
class Affine(CoefficientFn):
    """``a0 + a1*x`` with constant (possibly named) coefficients."""

    a0: CoefficientFn
    a1: CoefficientFn

    def __post_init__(self) -> None:
        if not (self.a0.is_constant and self.a1.is_constant):
            raise ParameterError("Affine coefficients must be constants")

    def jet(self, x: float) -> Jet:
        return Jet.x(x) * self.a1.value(x) + self.a0.value(x)

    def value(self, x: float) -> float:
        return self.a0.value(x) + self.a1.value(x) * x

    def _render(self) -> tuple[str, int]:
        slope = Product.of(self.a1, Coordinate())
        if isinstance(self.a0, Const) and self.a0.number == 0:
            return slope._render()
        return Sum((self.a0, slope))._render()

    def to_sympy(self, symbolic: bool = False) -> sympy.Expr:
        return self.a0.to_sympy(symbolic) + self.a1.to_sympy(symbolic) * X_SYMBOL

    def children(self) -> tuple[CoefficientFn, ...]:
        return (self.a0, self.a1)

    @property
    def is_constant(self) -> bool:
        return False


@dataclass(frozen=True)
class Polynomial(CoefficientFn):
    """``sum_k coeffs[k] * x**k`` with numeric coefficients (ascending)."""

    coeffs: tuple[float, ...]

    def jet(self, x: float) -> Jet:
        c = np.asarray(self.coeffs, dtype=float)
        derivatives = [npoly.polyval(x, npoly.polyder(c, k)) for k in range(5)]
        return Jet.from_x_derivatives(derivatives)

    def value(self, x: float) -> float:
        return float(npoly.polyval(x, np.asarray(self.coeffs, dtype=float)))

    def _render(self) -> tuple[str, int]:
        terms: list[CoefficientFn] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(Const(c))
                continue
            monomial = Coordinate() if k == 1 else Power(Coordinate(), Const(k))
            term = Product.of(Const(abs(c)), monomial)
            terms.append(Neg(term) if c < 0 else term)
        if not terms:
            return "0", _ATOM
        if len(terms) == 1:
            return terms[0]._render()
        return Sum(tuple(terms))._render()

    def to_sympy(self, symbolic: bool = False) -> sympy.Expr:
        return sum(
            (Const(c).to_sympy() * X_SYMBOL**k for k, c in enumerate(self.coeffs)),
            sympy.Integer(0),
        )

    def children(self) -> tuple[CoefficientFn, ...]:
        return ()

    @property
    def is_constant(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])


# ── Composites ───────────────────────────────────────────────────────


@dataclass(frozen=True)
class Sum(CoefficientFn):
    terms: tuple[CoefficientFn, ...]

    @classmethod
    def of(cls, *terms: CoefficientFn) -> "Sum":
        flat: list[CoefficientFn] = []
        for term in terms:
            flat.extend(term.terms if isinstance(term, Sum) else (term,))
        return cls(tuple(flat))

    def jet(self, x: float) -> Jet:
        total = self.terms[0].jet(x)
        for term in self.terms[1:]:
            total = total + term.jet(x)
        return total

    def value(self, x: float) -> float:
        return math.fsum(term.value(x) for term in self.terms)

    def _render(self) -> tuple[str, int]:
        parts = [_wrap(self.terms[0], _SUM)]
        for term in self.terms[1:]:
            if isinstance(term, Neg):
                parts.append(f" - {_wrap(term.arg, _PRODUCT)}")
            elif isinstance(term, Const) and term.number < 0:
                parts.append(f" - {format_number(-term.number)}")
            else:
                parts.append(f" + {_wrap(term, _PRODUCT)}")
        return "".join(parts), _SUM

    def to_sympy(self, symbolic: bool = False) -> sympy.Expr:
        return sympy.Add(*(term.to_sympy(symbolic) for term in self.terms))

    def children(self) -> tuple[CoefficientFn, ...]:
        return self.terms


@dataclass(frozen=True)
class Product(CoefficientFn):
    factors: tuple[CoefficientFn, ...]

    @classmethod
    def of(cls, *factors: CoefficientFn) -> "Product":
        flat: list[CoefficientFn] = []
        for factor in factors:
            flat.extend(factor.factors if isinstance(factor, Product) else (factor,))
        return cls(tuple(flat))

    def jet(self, x: float) -> Jet:
        total = self.factors[0].jet(x)
        for factor in self.factors[1:]:
            total = total * factor.jet(x)
        return total

    def value(self, x: float) -> float:
        return math.prod(factor.value(x) for factor in self.factors)

    def _render(self) -> tuple[str, int]:
        parts = [_wrap(self.factors[0], _PRODUCT)]
        for factor in self.factors[1:]:
            needs_parens = isinstance(factor, Neg) or (
                isinstance(factor, Const) and factor.number < 0
            )
            parts.append(_wrap(factor, _ATOM) if needs_parens else _wrap(factor, _PRODUCT))
        return "*".join(parts), _PRODUCT

    def to_sympy(self, symbolic: bool = False) -> sympy.Expr:
        return sympy.Mul(*(factor.to_sympy(symbolic) for factor in self.factors))

    def children(self) -> tuple[CoefficientFn, ...]:
        return self.factors


@dataclass(frozen=True)
class Quotient(CoefficientFn):
    num: CoefficientFn
    den: CoefficientFn

    def jet(self, x: float) -> Jet:
        den = self.den.jet(x)
        if den.value == 0.0:
            raise EvaluationError(f"division by zero in {self.render()} at x={x!r}")
        return self.num.jet(x) / den

    def value(self, x: float) -> float:
        den = self.den.value(x)
        if den == 0.0:
            raise EvaluationError(f"division by zero in {self.render()} at x={x!r}")
        return self.num.value(x) / den

    def _render(self) -> tuple[str, int]:
        return f"{_wrap(self.num, _PRODUCT)}/{_wrap(self.den, _POWER)}", _PRODUCT

    def to_sympy(self, symbolic: bool = False) -> sympy.Expr:
        return self.num.to_sympy(symbolic) / self.den.to_sympy(symbolic)

    def children(self) -> tuple[CoefficientFn, ...]:
        return (self.num, self.den)


@dataclass(frozen=True)
class Neg(CoefficientFn):
    arg: CoefficientFn

    def jet(self, x: float) -> Jet:
        return -self.arg.jet(x)

    def value(self, x: float) -> float:
        return -self.arg.value(x)

    def _render(self) -> tuple[str, int]:
        return f"-{_wrap(self.arg, _PRODUCT)}", _UNARY

    def to_sympy(self, symbolic: bool = False) -> sympy.Expr:
        return -self.arg.to_sympy(symbolic)

    def children(self) -> tuple[CoefficientFn, ...]:
        return (self.arg,)


@dataclass(frozen=True)
class Power(CoefficientFn):
    """``base ** exponent`` with an x-independent exponent."""

    base: CoefficientFn
    exponent: CoefficientFn

    def __post_init__(self) -> None:
        if not self.exponent.is_constant:
            raise UnsupportedFormError(
                "Power exponents must be constant; use exp(g*log(b)) instead"
            )

    def jet(self, x: float) -> Jet:
        base = self.base.jet(x)
        p = self.exponent.value(x)
        try:
            return jet_pow(base, p)
        except EvaluationError as exc:
            raise EvaluationError(f"{exc} in {self.render()} at x={x!r}") from exc

    def value(self, x: float) -> float:
        base = self.base.value(x)
        p = self.exponent.value(x)
        if (not float(p).is_integer() and base <= 0) or (base == 0 and p < 0):
            raise EvaluationError(
                f"power {self.render()} undefined at x={x!r} (base {base!r})"
            )
        return float(base**p)

    def _render(self) -> tuple[str, int]:
        return f"{_wrap(self.base, _ATOM)}**{_wrap(self.exponent, _ATOM)}", _POWER

    def to_sympy(self, symbolic: bool = False) -> sympy.Expr:
        return self.base.to_sympy(symbolic) ** self.exponent.to_sympy(symbolic)

    def children(self) -> tuple[CoefficientFn, ...]:
        return (self.base, self.exponent)


@dataclass(frozen=True)
class Exp(CoefficientFn):
    arg: CoefficientFn

    def jet(self, x: float) -> Jet:
        return jet_exp(self.arg.jet(x))

    def value(self, x: float) -> float:
        try:
            return math.exp(self.arg.value(x))
        except OverflowError as exc:
            raise EvaluationError(f"exp overflow in {self.render()} at x={x!r}") from exc

    def _render(self) -> tuple[str, int]:
        return f"exp({self.arg.render()})", _ATOM

    def to_sympy(self, symbolic: bool = False) -> sympy.Expr:
        return sympy.exp(self.arg.to_sympy(symbolic))

    def children(self) -> tuple[CoefficientFn, ...]:
        return (self.arg,)


@dataclass(frozen=True)
class Log(CoefficientFn):
    arg: CoefficientFn

    def jet(self, x: float) -> Jet:
        try:
            return jet_ln(self.arg.jet(x))
        except EvaluationError as exc:
            raise EvaluationError(f"{exc} in {self.render()} at x={x!r}") from exc

    def value(self, x: float) -> float:
        inner = self.arg.value(x)
        if inner <= 0:
            raise EvaluationError(f"log of non-positive value in {self.render()} at x={x!r}")
        return math.log(inner)

    def _render(self) -> tuple[str, int]:
        return f"log({self.arg.render()})", _ATOM

    def to_sympy(self, symbolic: bool = False) -> sympy.Expr:
        return sympy.log(self.arg.to_sympy(symbolic))

    def children(self) -> tuple[CoefficientFn, ...]:
        return (self.arg,)


@dataclass(frozen=True)
class TailIntegral(CoefficientFn):
    """``integral from x to upper of integrand(s) ds``.

    The value slot comes from adaptive quadrature; derivative slots are
    exact, ``d^k/dx^k = -integrand^(k-1)(x)``.
    """

    integrand: CoefficientFn
    upper: float
    tol: float = settings.quadrature_tolerance

    def value(self, x: float) -> float:
        if x == self.upper:
            return 0.0
        result, _ = integrate.quad(
            self.integrand.value, x, self.upper, epsabs=self.tol, epsrel=self.tol, limit=200
        )
        return float(result)

    def jet(self, x: float) -> Jet:
        inner = self.integrand.jet(x).x_derivatives()
        return Jet.from_x_derivatives([self.value(x)] + [-d for d in inner[:4]])

    def _render(self) -> tuple[str, int]:
        return f"Integral({self.integrand.render()}, (x, x, {format_number(self.upper)}))", _ATOM

    def to_sympy(self, symbolic: bool = False) -> sympy.Expr:
        s = sympy.Symbol("s")
        body = self.integrand.to_sympy(symbolic).subs(X_SYMBOL, s)
        return sympy.Integral(body, (s, X_SYMBOL, self.upper))

    def children(self) -> tuple[CoefficientFn, ...]:
        return (self.integrand,)


# ── Builders ─────────────────────────────────────────────────────────


def const(value: Number) -> Const:
    return Const(float(value))


def param(name: str, value: Number) -> Param:
    return Param(name, float(value))


def coordinate() -> Coordinate:
    return Coordinate()


def exp(arg: FnLike) -> Exp:
    return Exp(as_fn(arg))


def log(arg: FnLike) -> Log:
    return Log(as_fn(arg))


def sqrt(arg: FnLike) -> Power:
    return Power(as_fn(arg), Const(0.5))


def affine(a0: FnLike, a1: FnLike) -> Affine:
    return Affine(as_fn(a0), as_fn(a1))


def polynomial(coeffs: Iterable[Number]) -> Polynomial:
    return Polynomial(tuple(float(c) for c in coeffs))


def sample_field(fn: CoefficientFn, grid: Iterable[float]) -> list[Jet]:
    """Evaluate ``fn`` at every grid point, naming the failing index."""
    jets: list[Jet] = []
    for index, x in enumerate(grid):
        try:
            jets.append(fn.jet(float(x)))
        except EvaluationError as exc:
            raise EvaluationError(f"sample {index} (x={x!r}): {exc}") from exc
    return jets


def check_positive(
    fn: CoefficientFn,
    domain: tuple[float, float],
    samples: int = settings.positivity_samples,
) -> list[float]:
    """Return the cell-midpoint sample points where ``fn`` is not positive."""
    x_min, length = domain
    h = (length - x_min) / samples
    bad: list[float] = []
    for k in range(samples):
        xk = x_min + (k + 0.5) * h
        if not fn.value(xk) > 0:
            bad.append(xk)
    return bad


# ── sympy bridge ─────────────────────────────────────────────────────


def polynomial_coefficients(fn: CoefficientFn) -> list[float] | None:
    """Ascending numeric coefficients if ``fn`` is a polynomial in x."""
    if isinstance(fn, Polynomial):
        return list(fn.coeffs)
    try:
        poly = sympy.Poly(sympy.expand(fn.to_sympy()), X_SYMBOL)
    except (PolynomialError, GeneratorsNeeded):
        return None
    if poly.free_symbols - {X_SYMBOL}:
        return None
    return [float(c) for c in reversed(poly.all_coeffs())]


def from_sympy(expr: sympy.Expr, params: Mapping[str, float] | None = None) -> CoefficientFn:
    """Convert a sympy expression in ``x`` to a coefficient tree.

    Symbols other than ``x`` must be listed in ``params``; they become
    named ``Param`` nodes.

    Raises:
        ParameterError: For symbols with no value.
        UnsupportedFormError: For functions outside the node set.
    """
    params = dict(params or {})
    expr = sympy.sympify(expr)

    if expr.is_Symbol:
        if expr.name == X_SYMBOL.name:
            return Coordinate()
        if expr.name in params:
            return Param(expr.name, float(params[expr.name]))
        raise ParameterError(f"no value given for symbol {expr.name!r}")
    if expr.is_number:
        if not expr.is_real:
            raise UnsupportedFormError(f"complex constant {expr} in coefficient")
        return Const(float(expr))
    if expr.is_Add:
        return Sum.of(*(from_sympy(arg, params) for arg in expr.args))
    if expr.is_Mul:
        coeff, rest = expr.as_coeff_Mul()
        if coeff == -1:
            return Neg(from_sympy(rest, params))
        return Product.of(*(from_sympy(arg, params) for arg in expr.args))
    if expr.is_Pow:
        base, exponent = expr.args
        if X_SYMBOL in exponent.free_symbols:
            return Exp(Product.of(from_sympy(exponent, params), Log(from_sympy(base, params))))
        if exponent == -1:
            return Quotient(Const(1.0), from_sympy(base, params))
        return Power(from_sympy(base, params), from_sympy(exponent, params))
    if isinstance(expr, sympy.exp):
        return Exp(from_sympy(expr.args[0], params))
    if isinstance(expr, sympy.log):
        return Log(from_sympy(expr.args[0], params))
    raise UnsupportedFormError(f"cannot represent {expr} as a coefficient function")


def parse_expression(text: str, params: Mapping[str, float] | None = None) -> CoefficientFn:
    """Parse formula text such as ``"a1*exp(-v*x)"``."""
    params = dict(params or {})
    local_dict = {name: sympy.Symbol(name) for name in params}
    local_dict["x"] = X_SYMBOL
    try:
        expr = parse_expr(text, local_dict=local_dict)
    except (SyntaxError, TypeError, ValueError, TokenError, sympy.SympifyError) as exc:
        raise ParameterError(f"cannot parse expression {text!r}: {exc}") from exc
    return from_sympy(expr, params)
