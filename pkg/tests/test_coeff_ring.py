"""Tests for exact rationals and sparse polynomials."""

from fractions import Fraction

import pytest

from algebra.coeff_ring import (
    PolyOp,
    Polynomial,
    as_rational,
    format_rational,
    partial_derivative,
    poly_arith,
    poly_sum,
)
from core.exceptions import DimensionMismatchError, IndexOutOfRangeError, StructuralError


@pytest.fixture
def xyz():
    return [Polynomial.variable(3, i) for i in range(3)]


class TestRationals:
    def test_coercion(self):
        assert as_rational(3) == Fraction(3)
        assert as_rational("3/6") == Fraction(1, 2)
        assert as_rational(Fraction(2, 4)) == Fraction(1, 2)

    def test_bad_inputs_raise(self):
        with pytest.raises(StructuralError):
            as_rational("1/0")
        with pytest.raises(StructuralError):
            as_rational(True)
        with pytest.raises(StructuralError):
            as_rational(0.5)

    def test_format(self):
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(-3, 2)) == "-3/2"


class TestPolynomial:
    def test_zero_terms_dropped(self):
        p = Polynomial(2, {(1, 0): 1, (0, 1): 0})
        assert len(p) == 1
        assert Polynomial(2, {(1, 0): 0}).is_zero()

    def test_duplicate_monomials_cancel(self, xyz):
        x, y, _ = xyz
        assert (x + y - x - y).is_zero()

    def test_wrong_exponent_length(self):
        with pytest.raises(DimensionMismatchError):
            Polynomial(2, {(1, 0, 0): 1})

    def test_variable_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError):
            Polynomial.variable(2, 2)

    def test_ring_axioms_on_samples(self, xyz):
        x, y, z = xyz
        a, b, c = x * y + 2, y - z.scale(Fraction(1, 3)), x * x + z
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a - a == Polynomial.zero(3)

    def test_power(self, xyz):
        x, y, _ = xyz
        assert (x + y) ** 2 == x * x + (x * y).scale(2) + y * y
        assert (x + y) ** 0 == Polynomial.one(3)

    def test_int_equality(self):
        assert Polynomial.constant(2, 5) == 5
        assert Polynomial.zero(2) == 0
        assert Polynomial.variable(2, 0) != 1

    def test_mismatched_arith(self):
        with pytest.raises(DimensionMismatchError):
            poly_arith(Polynomial.variable(2, 0), Polynomial.variable(3, 0), PolyOp.ADD)

    def test_poly_arith_ops(self, xyz):
        x, y, _ = xyz
        assert poly_arith(x, y, "add") == x + y
        assert poly_arith(x, y, PolyOp.SUB) == x - y
        assert poly_arith(x, y, PolyOp.MUL) == x * y

    def test_evaluate(self, xyz):
        x, y, z = xyz
        p = x * y + z.scale(Fraction(1, 2))
        assert p.evaluate([2, 3, 1]) == Fraction(13, 2)

    def test_total_degree(self, xyz):
        x, y, _ = xyz
        assert (x * x * y + y).total_degree() == 3
        assert Polynomial.constant(3, 7).is_constant()


class TestDerivative:
    def test_partial(self, xyz):
        x, y, _ = xyz
        p = x * x * y
        assert partial_derivative(p, 0) == (x * y).scale(2)
        assert partial_derivative(p, 1) == x * x
        assert partial_derivative(p, 2).is_zero()

    def test_leibniz(self, xyz):
        x, y, z = xyz
        f, g = x * y + z, y * y - x
        for i in range(3):
            assert partial_derivative(f * g, i) == partial_derivative(f, i) * g + f * partial_derivative(g, i)

    def test_index_checked(self):
        with pytest.raises(IndexOutOfRangeError):
            partial_derivative(Polynomial.variable(2, 0), 5)


class TestPrinting:
    def test_canonical_order(self, xyz):
        x, y, z = xyz
        p = (x * x * y).scale(Fraction(3, 2)) - z
        assert p.to_source(["x", "y", "z"]) == "3/2 x**2 y - z"

    def test_zero_and_constant(self):
        assert Polynomial.zero(2).to_source() == "0"
        assert Polynomial.constant(2, -1).to_source() == "-1"

    def test_sum(self, xyz):
        assert poly_sum(xyz, 3) == xyz[0] + xyz[1] + xyz[2]
        assert poly_sum([], 3).is_zero()
