"""
Tests for the intpoly module.
"""

import unittest
import os
import sys
import math
import random
from fractions import Fraction

# Add parent directory to path to import modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.polynomials.intpoly import (
    IntPoly,
    _schoolbook,
    compose,
    derivative,
    derivative_k,
    estimate_iterate_digits,
    evaluate,
    evaluate_exact,
    format_poly,
    iterate,
    max_coefficient_digits,
    max_parse_degree,
    multiplicity_at,
    multiply,
    parse_poly,
    power,
    reduced,
    set_max_coefficient_digits,
    set_max_parse_degree,
)
from src.utils.error_handler import (
    CoefficientOverflowError,
    NumericOverflowError,
    PolynomialError,
    PolynomialParseError,
)


class TestIntPoly(unittest.TestCase):
    """Tests for the IntPoly value type and arithmetic."""

    def test_trailing_zeros_stripped(self):
        """Test normalization and the zero polynomial."""
        self.assertEqual(IntPoly((1, 2, 0, 0)).coeffs, (1, 2))
        self.assertEqual(IntPoly((0, 0)).degree, -1)
        self.assertTrue(IntPoly().is_zero())
        self.assertEqual(IntPoly((3, 0, 5)).leading, 5)

    def test_operators(self):
        """Test addition, subtraction and multiplication."""
        a, b = IntPoly((1, 1)), IntPoly((1, 3))
        self.assertEqual(a * b, IntPoly((1, 4, 3)))
        self.assertEqual(a + b, IntPoly((2, 4)))
        self.assertEqual(a - a, IntPoly())
        self.assertEqual(str(a * b), "1+4z+3z^2")

    def test_kronecker_matches_schoolbook(self):
        """Test the packed product against the schoolbook product, signs included."""
        rng = random.Random(31)
        a = IntPoly(tuple(rng.randint(-10 ** 12, 10 ** 12) for _ in range(120)))
        b = IntPoly(tuple(rng.randint(-10 ** 6, 10 ** 6) for _ in range(90)))
        self.assertEqual(multiply(a, b).coeffs, IntPoly(tuple(_schoolbook(a.coeffs, b.coeffs))).coeffs)

    def test_power_and_compose(self):
        """Test powers and composition."""
        self.assertEqual(power(IntPoly((1, 1)), 4), IntPoly((1, 4, 6, 4, 1)))
        self.assertEqual(power(IntPoly((5, 7)), 0), IntPoly((1,)))
        with self.assertRaises(PolynomialError):
            power(IntPoly((1, 1)), -1)
        # (1+z)(z^2) = z^2 + z^3
        self.assertEqual(compose(IntPoly((0, 0, 1, 1)), IntPoly((0, 1))), IntPoly((0, 0, 1, 1)))
        self.assertEqual(compose(IntPoly((1, 1)), IntPoly((0, 0, 1))), IntPoly((1, 0, 1)))

    def test_iterate(self):
        """Test iterates of z + z^2."""
        p = IntPoly((0, 1, 1))
        self.assertEqual(iterate(p, 0), IntPoly.identity())
        self.assertEqual(iterate(p, 1), p)
        self.assertEqual(iterate(p, 2), IntPoly((0, 1, 2, 2, 1)))
        self.assertEqual(iterate(p, 5).degree, 32)

    def test_reduced(self):
        """Test I - 1 and its constant-term check."""
        self.assertEqual(reduced(IntPoly((1, 4, 3))), IntPoly((0, 4, 3)))
        with self.assertRaises(PolynomialError):
            reduced(IntPoly((2, 4, 3)))

    def test_derivatives(self):
        """Test first and higher derivatives."""
        p = IntPoly((1, 4, 3))
        self.assertEqual(derivative(p), IntPoly((4, 6)))
        self.assertEqual(derivative_k(p, 2), IntPoly((6,)))
        self.assertTrue(derivative_k(p, 3).is_zero())


class TestEvaluation(unittest.TestCase):
    """Tests for evaluation and root multiplicity."""

    def test_evaluate(self):
        """Test complex and exact Horner evaluation."""
        p = IntPoly((1, 4, 3))
        self.assertAlmostEqual(evaluate(p, -1), 0)
        self.assertAlmostEqual(evaluate(p, 1j), complex(-2, 4))
        self.assertEqual(evaluate_exact(p, Fraction(-1, 3)), 0)
        self.assertEqual(evaluate_exact(p, 2), 21)

    def test_evaluate_overflow(self):
        """Test that non-finite values raise NumericOverflowError."""
        with self.assertRaises(NumericOverflowError):
            evaluate(IntPoly((1, 1, 1, 1)), 1e200)
        with self.assertRaises(NumericOverflowError):
            evaluate(IntPoly((1, 10 ** 400)), 1)

    def test_multiplicity(self):
        """Test root multiplicities at integer points."""
        self.assertEqual(multiplicity_at(power(IntPoly((1, 1)), 3), -1), 3)
        self.assertEqual(multiplicity_at(IntPoly((1, 4, 3)), -1), 1)
        self.assertEqual(multiplicity_at(IntPoly((1, 4, 3)), 0), 0)
        self.assertEqual(multiplicity_at(IntPoly((0, 0, 4, 4)), 0), 2)
        with self.assertRaises(PolynomialError):
            multiplicity_at(IntPoly(), 0)


class TestCoefficientGuard(unittest.TestCase):
    """Tests for the coefficient-size guard and digit estimate."""

    def setUp(self):
        """Remember the current guard."""
        self.saved = max_coefficient_digits()

    def tearDown(self):
        """Restore the guard."""
        set_max_coefficient_digits(self.saved)

    def test_guard_trips(self):
        """Test that products beyond the guard raise."""
        set_max_coefficient_digits(5)
        with self.assertRaises(CoefficientOverflowError):
            power(IntPoly((1, 10)), 6)

    def test_invalid_guard(self):
        """Test that a non-positive guard is rejected."""
        with self.assertRaises(PolynomialError):
            set_max_coefficient_digits(0)

    def test_estimate_is_upper_bound(self):
        """Test the iterate digit estimate against the real largest coefficient."""
        p = IntPoly((0, 9, 24, 16))
        for m in range(1, 4):
            actual = math.log10(max(iterate(p, m).coeffs))
            self.assertGreaterEqual(estimate_iterate_digits(p, m) + 1e-9, actual)


class TestParsing(unittest.TestCase):
    """Tests for the textual polynomial format."""

    def test_parse(self):
        """Test accepted spellings."""
        self.assertEqual(parse_poly("1+16z+20z^2+8z^3+z^4"), IntPoly((1, 16, 20, 8, 1)))
        self.assertEqual(parse_poly("z^2 + 1"), IntPoly((1, 0, 1)))
        self.assertEqual(parse_poly("3*z-z"), IntPoly((0, 2)))
        self.assertEqual(parse_poly("z+z"), IntPoly((0, 2)))

    def test_parse_errors(self):
        """Test rejected spellings."""
        for text in ("", "  ", "1++z", "2x", "z^", "*z", "1+3*"):
            with self.assertRaises(PolynomialParseError, msg=text):
                parse_poly(text)

    def test_parse_degree_limit(self):
        """Test that exponents above the maximum degree are refused before expansion."""
        saved = max_parse_degree()
        try:
            with self.assertRaises(PolynomialParseError) as ctx:
                parse_poly("1+z^1000000000")
            self.assertEqual(ctx.exception.details["max_degree"], saved)
            set_max_parse_degree(4)
            self.assertEqual(parse_poly("1+z^4"), IntPoly((1, 0, 0, 0, 1)))
            with self.assertRaises(PolynomialParseError):
                parse_poly("z^5-z^5")
            with self.assertRaises(PolynomialError):
                set_max_parse_degree(0)
        finally:
            set_max_parse_degree(saved)

    def test_format(self):
        """Test printing with unit and negative coefficients."""
        self.assertEqual(format_poly(IntPoly()), "0")
        self.assertEqual(format_poly(IntPoly((0, 1, -2))), "z-2z^2")
        self.assertEqual(format_poly(IntPoly((-1, 0, 1))), "-1+z^2")
        p = IntPoly((1, 9, 24, 16))
        self.assertEqual(parse_poly(format_poly(p)), p)


if __name__ == '__main__':
    unittest.main()
