"""Unit tests for the fixed-order jet arithmetic.

Every primitive is checked against closed-form derivatives and against a
5-point central finite-difference oracle of its scalar map.
"""

from __future__ import annotations

import math

import numpy as np
import pytest

from beamsym.core.errors import EvaluationError
from beamsym.services.jets import (
    Jet,
    jet_cos,
    jet_div,
    jet_exp,
    jet_ln,
    jet_mul,
    jet_pow,
    jet_sin,
    jet_sqrt,
)


def _fd_derivatives(f, x0: float, h: float = 1e-3) -> tuple[float, float]:
    """First and second derivatives by 5-point central differences."""
    fm2, fm1, f0, fp1, fp2 = (f(x0 + k * h) for k in (-2, -1, 0, 1, 2))
    d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h)
    d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h)
    return d1, d2


# ── Seeds and accessors ──────────────────────────────────────────────


class TestSeeds:
    def test_coordinate_x_seed(self) -> None:
        j = Jet.x(0.7)
        assert j.value == 0.7
        assert j.slot(1, 0) == 1.0
        assert np.count_nonzero(j.coeffs) == 2

    def test_coordinate_t_seed(self) -> None:
        j = Jet.t(2.0)
        assert j.slot(0, 1) == 1.0
        assert j.slot(1, 0) == 0.0

    def test_shape_is_validated(self) -> None:
        with pytest.raises(ValueError):
            Jet(np.zeros((3, 3)))

    def test_non_finite_rejected(self) -> None:
        coeffs = np.zeros((5, 3))
        coeffs[2, 1] = math.nan
        with pytest.raises(EvaluationError):
            Jet(coeffs)

    def test_coeffs_are_read_only(self) -> None:
        j = Jet.constant(3.0)
        with pytest.raises(ValueError):
            j.coeffs[0, 0] = 1.0

    def test_mixed_slots_absent_for_separate_coordinates(self) -> None:
        """x*x + t has no mixed slots; x*t has exactly one."""
        x, t = Jet.x(0.3), Jet.t(0.8)
        assert (x * x + t).slot(1, 1) == 0.0
        xt = x * t
        assert xt.slot(1, 1) == 1.0
        assert xt.slot(2, 1) == 0.0
        assert xt.slot(1, 2) == 0.0


# ── Products ─────────────────────────────────────────────────────────


class TestLeibniz:
    def test_x_squared_times_x_cubed(self) -> None:
        """Derivatives of x^5 at 1 are exactly (1, 5, 20, 60, 120)."""
        x = Jet.x(1.0)
        product = jet_mul(x * x, x * x * x)
        assert product.x_derivatives() == [1.0, 5.0, 20.0, 60.0, 120.0]

    def test_identity(self) -> None:
        a = jet_exp(Jet.x(0.2)) * 3.0 + Jet.t(1.0)
        assert jet_mul(a, Jet.constant(1.0)).allclose(a, rtol=0.0)

    def test_exponential_product(self) -> None:
        x = Jet.x(0.3)
        lhs = jet_exp(x) * jet_exp(2.0 * x)
        rhs = jet_exp(3.0 * x)
        assert lhs.allclose(rhs, rtol=1e-12)

    @pytest.mark.parametrize("seed", range(5))
    def test_random_integer_polynomials_bit_exact(self, seed: int) -> None:
        rng = np.random.default_rng(seed)
        p = rng.integers(-5, 6, size=5)
        q = rng.integers(-5, 6, size=5)
        x0 = float(rng.integers(-3, 4))

        def poly_jet(c: np.ndarray) -> Jet:
            x = Jet.x(x0)
            total = Jet.constant(0.0)
            power = Jet.constant(1.0)
            for ck in c:
                total = total + power * float(ck)
                power = power * x
            return total

        product = np.polynomial.Polynomial(p) * np.polynomial.Polynomial(q)
        expected = [float(product.deriv(k)(x0)) if k else float(product(x0)) for k in range(5)]
        assert jet_mul(poly_jet(p), poly_jet(q)).x_derivatives() == expected


# ── Elementary functions ─────────────────────────────────────────────


class TestElementary:
    def test_exp_at_zero(self) -> None:
        assert jet_exp(Jet.x(0.0)).x_derivatives() == pytest.approx([1.0] * 5, rel=1e-15)

    def test_pow_binomial(self) -> None:
        j = jet_pow(Jet.x(0.0) + 1.0, 4)
        assert j.x_derivatives() == [1.0, 4.0, 12.0, 24.0, 24.0]

    def test_negative_integer_power_of_negative_value(self) -> None:
        j = jet_pow(Jet.x(-2.0), -1)
        assert j.x_derivatives() == pytest.approx([-0.5, -0.25, -0.25, -0.375, -0.75])

    def test_exp_of_ln_round_trip(self) -> None:
        a = jet_exp(Jet.x(0.4) * 0.5) * (Jet.t(0.3) + 2.0)
        assert jet_exp(jet_ln(a)).allclose(a, rtol=1e-12, atol=1e-14)

    def test_sin_cos_identity(self) -> None:
        a = Jet.x(0.9) * Jet.t(0.4)
        total = jet_sin(a) * jet_sin(a) + jet_cos(a) * jet_cos(a)
        assert total.allclose(Jet.constant(1.0), rtol=0.0, atol=1e-13)

    @pytest.mark.parametrize(
        "primitive, bad_value",
        [(jet_ln, 0.0), (jet_sqrt, -1.0), (lambda a: jet_pow(a, 0.5), -0.1)],
    )
    def test_domain_violations(self, primitive, bad_value: float) -> None:
        with pytest.raises(EvaluationError):
            primitive(Jet.x(bad_value))

    def test_div_by_zero_value(self) -> None:
        with pytest.raises(EvaluationError, match="denominator"):
            jet_div(Jet.constant(1.0), Jet.x(0.0))

    def test_exp_overflow(self) -> None:
        with pytest.raises(EvaluationError, match="jet_exp"):
            jet_exp(Jet.x(800.0))

    def test_scalar_division(self) -> None:
        assert (Jet.x(2.0) / 4.0).x_derivatives() == [0.5, 0.25, 0.0, 0.0, 0.0]
        with pytest.raises(EvaluationError):
            Jet.x(1.0) / 0


# ── Finite-difference oracle ─────────────────────────────────────────

_PRIMITIVES = {
    "exp": (jet_exp, math.exp, (-1.0, 1.0)),
    "ln": (jet_ln, math.log, (0.5, 2.0)),
    "sqrt": (jet_sqrt, math.sqrt, (0.5, 2.0)),
    "sin": (jet_sin, math.sin, (-2.0, 2.0)),
    "cos": (jet_cos, math.cos, (-2.0, 2.0)),
    "pow_2_5": (lambda a: jet_pow(a, 2.5), lambda v: v**2.5, (0.5, 2.0)),
    "pow_neg_3": (lambda a: jet_pow(a, -3), lambda v: v**-3, (0.5, 2.0)),
    "recip": (lambda a: jet_div(Jet.constant(1.0), a), lambda v: 1.0 / v, (0.5, 2.0)),
}


class TestFiniteDifferenceOracle:
    @pytest.mark.parametrize("name", sorted(_PRIMITIVES))
    def test_primitive_matches_central_differences(self, name: str) -> None:
        primitive, scalar, (lo, hi) = _PRIMITIVES[name]
        rng = np.random.default_rng(1234)
        for x0 in rng.uniform(lo, hi, size=20):
            j = primitive(Jet.x(float(x0)))
            d1, d2 = _fd_derivatives(scalar, float(x0))
            assert j.value == pytest.approx(scalar(float(x0)), rel=1e-14)
            assert j.slot(1) == pytest.approx(d1, rel=1e-6, abs=1e-9)
            assert j.slot(2) == pytest.approx(d2, rel=1e-6, abs=1e-7)

    @pytest.mark.parametrize("name", sorted(_PRIMITIVES))
    def test_higher_slots_match_differences_of_lower_slots(self, name: str) -> None:
        """The k-th slot is the derivative of the (k-1)-th slot."""
        primitive, _, (lo, hi) = _PRIMITIVES[name]
        rng = np.random.default_rng(99)
        for x0 in rng.uniform(lo + 0.01, hi - 0.01, size=20):
            j = primitive(Jet.x(float(x0)))
            for k in (3, 4):
                d1, _ = _fd_derivatives(lambda v: primitive(Jet.x(v)).slot(k - 1), float(x0))
                assert j.slot(k) == pytest.approx(d1, rel=1e-6, abs=1e-6)
