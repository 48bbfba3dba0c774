"""Tests for ksforge.exact"""

from fractions import Fraction

import pytest

from ksforge.exact import (I_UNIT, ONE, ZERO, ExactMatrix, Gaussian, integer_form, product,
                           same_span)


class TestGaussian:
    """Arithmetic on Gaussian rationals."""

    def test_i_squared(self):
        assert I_UNIT * I_UNIT == -ONE

    def test_division_is_exact(self):
        value = Gaussian(Fraction(1), Fraction(1)) / Gaussian(Fraction(0), Fraction(2))
        assert value == Gaussian(Fraction(1, 2), Fraction(-1, 2))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO

    def test_of_complex_literal(self):
        assert Gaussian.of(-1j) == -I_UNIT
        assert Gaussian.of(3) == Gaussian(Fraction(3))

    def test_str(self):
        assert str(Gaussian(Fraction(1, 2), Fraction(-1))) == "1/2-1i"
        assert str(I_UNIT) == "1i"


class TestExactMatrix:
    """Products, Kronecker products and pivots."""

    def test_identity_is_neutral(self):
        matrix = ExactMatrix.from_rows([[1, 1j], [0, 2]])
        assert matrix @ ExactMatrix.identity(2) == matrix
        assert ExactMatrix.identity(2) @ matrix == matrix

    def test_kron_shape_and_entries(self):
        x = ExactMatrix.from_rows([[0, 1], [1, 0]])
        z = ExactMatrix.from_rows([[1, 0], [0, -1]])
        xz = x.kron(z)
        assert (xz.rows, xz.cols) == (4, 4)
        assert xz[0, 2] == ONE
        assert xz[1, 3] == -ONE
        assert xz[0, 0] == ZERO

    def test_adjoint_conjugates(self):
        y = ExactMatrix.from_rows([[0, -1j], [1j, 0]])
        assert y.adjoint() == y

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            ExactMatrix.identity(2) + ExactMatrix.identity(4)

    def test_product_of_list(self):
        x = ExactMatrix.from_rows([[0, 1], [1, 0]])
        assert product([x, x, x]) == x
        assert (product([x, x]) - ExactMatrix.identity(2)).is_zero()

    def test_pivot_columns_left_to_right(self):
        matrix = ExactMatrix.from_rows([[1, 2, 0, 1],
                                        [0, 0, 1, 1],
                                        [1, 2, 0, 1]])
        assert matrix.pivot_columns() == [0, 2]
        assert matrix.rank() == 2


class TestIntegerForm:
    """Smallest Gaussian-integer scaling of vectors."""

    def test_clears_denominators(self):
        half = Gaussian(Fraction(1, 2))
        assert integer_form([half, ZERO, -half]) == ((1, 0), (0, 0), (-1, 0))

    def test_first_entry_made_positive(self):
        assert integer_form([Gaussian(Fraction(-2)), Gaussian(Fraction(4))]) == ((1, 0), (-2, 0))

    def test_imaginary_leading_entry(self):
        assert integer_form([ZERO, -I_UNIT]) == ((0, 0), (0, 1))

    def test_zero_vector(self):
        with pytest.raises(ValueError):
            integer_form([ZERO, ZERO])

    def test_same_span(self):
        one, two = Gaussian.of(1), Gaussian.of(2)
        assert same_span([[one, ZERO], [ZERO, one]], [[one, one], [one, -one]])
        assert not same_span([[one, ZERO]], [[ZERO, one]])
        assert same_span([[one, two]], [[two, Gaussian.of(4)]])
