"""
Tests for the Chebyshev module.
"""

import unittest
import os
import sys
from fractions import Fraction

# Add parent directory to path to import modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.graphs.counting import independence_polynomial
from src.graphs.graph import complete_graph, disjoint_union
from src.polynomials.chebyshev import (
    ConjugationParams,
    binomial_bound_holds,
    cheb_derivative_at_one,
    chebyshev,
    conjugacy_holds,
    conjugate_coefficients,
    segment_candidate,
    segment_candidates,
    segment_edge_count,
)
from src.polynomials.intpoly import IntPoly, add, derivative_k, evaluate_exact, reduced
from src.utils.error_handler import PolynomialError


class TestChebyshev(unittest.TestCase):
    """Tests for Chebyshev polynomials and their derivatives at 1."""

    def test_small_degrees(self):
        """Test T_0 to T_4."""
        self.assertEqual(chebyshev(0), IntPoly((1,)))
        self.assertEqual(chebyshev(1), IntPoly((0, 1)))
        self.assertEqual(chebyshev(2), IntPoly((-1, 0, 2)))
        self.assertEqual(chebyshev(4), IntPoly((1, 0, -8, 0, 8)))
        with self.assertRaises(PolynomialError):
            chebyshev(-1)

    def test_derivative_at_one(self):
        """Test the product formula against direct differentiation."""
        for n in range(1, 10):
            for m in range(n + 1):
                expected = evaluate_exact(derivative_k(chebyshev(n), m), 1)
                self.assertEqual(cheb_derivative_at_one(n, m), expected)
        with self.assertRaises(PolynomialError):
            cheb_derivative_at_one(3, 4)


class TestSegmentCandidates(unittest.TestCase):
    """Tests for the polynomials conjugate to Chebyshev polynomials."""

    def test_conjugacy(self):
        """Test that every candidate satisfies the conjugacy exactly."""
        for n in range(2, 9):
            for k, p in segment_candidates(n).items():
                self.assertTrue(conjugacy_holds(p, n, k), (n, k))

    def test_perturbed_candidate_fails(self):
        """Test that changing one coefficient breaks the conjugacy."""
        p = add(segment_candidate(4, 3), IntPoly((0, 0, 1)))
        self.assertFalse(conjugacy_holds(p, 4, 3))

    def test_known_candidates(self):
        """Test the degree-2, degree-3 and degree-4 candidates."""
        self.assertEqual(segment_candidate(2, 4), IntPoly((0, 4, 4)))
        self.assertEqual(segment_candidate(2, 1), IntPoly((0, 4, 1)))
        self.assertEqual(segment_candidate(3, 1), IntPoly((0, 9, 6, 1)))
        self.assertEqual(segment_candidate(4, 3), IntPoly((0, 16, 60, 72, 27)))
        self.assertEqual(segment_candidate(4, 4), IntPoly((0, 16, 80, 128, 64)))

    def test_two_cliques_and_a_vertex(self):
        """Test that K4 + K4 + K1 is the degree-3 candidate with k = 4."""
        g = disjoint_union(disjoint_union(complete_graph(4), complete_graph(4)), complete_graph(1))
        self.assertEqual(reduced(independence_polynomial(g)), segment_candidate(3, 4))

    def test_coefficients_and_params(self):
        """Test exact coefficients and parameter validation."""
        params = ConjugationParams.for_segment(3, 1)
        self.assertEqual(params.a, Fraction(1, 2))
        self.assertEqual(params.k, 1)
        self.assertEqual(conjugate_coefficients(params), [9, 6, 1])
        with self.assertRaises(PolynomialError):
            ConjugationParams(Fraction(0), 3)
        with self.assertRaises(PolynomialError):
            ConjugationParams(Fraction(1), 1)
        with self.assertRaises(PolynomialError):
            segment_candidate(3, 5)

    def test_edge_count(self):
        """Test a_2 = (k / 12) n^2 (n^2 - 1)."""
        self.assertEqual(segment_edge_count(3, 4), 24)
        self.assertEqual(segment_edge_count(4, 3), 60)
        for n in range(2, 8):
            for k in (1, 2, 3, 4):
                self.assertEqual(segment_edge_count(n, k), segment_candidate(n, k).coefficient(2))

    def test_binomial_bound(self):
        """Test 6^(n-1) < C(n^2, n) from n = 3 on, and its failure at n = 2."""
        self.assertFalse(binomial_bound_holds(2))
        for n in range(3, 51):
            self.assertTrue(binomial_bound_holds(n), n)


if __name__ == '__main__':
    unittest.main()
