"""
Chebyshev polynomials of the first kind and the segment candidates.

A reduced independence polynomial P of degree n whose Julia set is a
segment satisfies a*P(z) + 1 = T_n(a*z + 1) with a = k/2, k in {1, 2, 3, 4}.
Expanding T_n around 1 gives the coefficients

    a_m = a^(m-1) / m! * prod_{j<m} (n^2 - j^2) / (2j + 1)

Conversely, every polynomial of this form is affinely conjugate to T_n, so
its Julia set is the image of [-1, 1], namely the segment [-4/k, 0]. All
arithmetic here is exact.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, List, Union

from .intpoly import IntPoly, add, multiply, power, scale
from ..utils.error_handler import PolynomialError

logger = logging.getLogger('indatt.polynomials.chebyshev')

SEGMENT_INDICES = (1, 2, 3, 4)


@lru_cache(maxsize=None)
def chebyshev(n: int) -> IntPoly:
    """T_n by T_n = 2z T_{n-1} - T_{n-2}."""
    if n < 0:
        raise PolynomialError(f"Chebyshev degree must be non-negative, got {n}")
    previous, current = IntPoly.constant(1), IntPoly.identity()
    if n == 0:
        return previous
    two_z = IntPoly((0, 2))
    for _ in range(n - 1):
        previous, current = current, multiply(two_z, current) - previous
    return current


def cheb_derivative_at_one(n: int, m: int) -> int:
    """
    T_n^(m)(1) = prod_{j<m} (n^2 - j^2) / (2j + 1).

    Raises:
        PolynomialError: If m is outside 0..n, or the product is not integral
    """
    if not 0 <= m <= n:
        raise PolynomialError(f"Derivative order {m} outside 0..{n}")
    value = Fraction(1)
    for j in range(m):
        value *= Fraction(n * n - j * j, 2 * j + 1)
    if value.denominator != 1:
        raise PolynomialError(f"Non-integral derivative value T_{n}^({m})(1) = {value}")
    return value.numerator


@dataclass(frozen=True)
class ConjugationParams:
    """The affine map phi(z) = a z + 1 together with the degree n."""

    a: Fraction
    n: int

    def __post_init__(self):
        object.__setattr__(self, 'a', Fraction(self.a))
        if self.a <= 0:
            raise PolynomialError(f"Conjugation parameter must be positive, got {self.a}")
        if self.n < 2:
            raise PolynomialError(f"Degree must be at least 2, got {self.n}")

    @classmethod
    def for_segment(cls, n: int, k: int) -> "ConjugationParams":
        return cls(Fraction(k, 2), n)

    @property
    def k(self) -> Fraction:
        return 2 * self.a


def conjugate_coefficients(params: ConjugationParams) -> List[Fraction]:
    """Coefficients a_1..a_n of the P with a P(z) + 1 = T_n(a z + 1)."""
    a, n = params.a, params.n
    return [a ** (m - 1) / factorial(m) * cheb_derivative_at_one(n, m) for m in range(1, n + 1)]


def _as_reduced_poly(coefficients: List[Fraction]) -> IntPoly:
    if any(c.denominator != 1 for c in coefficients):
        raise PolynomialError(f"Coefficients are not integral: {coefficients}")
    return IntPoly((0,) + tuple(c.numerator for c in coefficients))


def segment_candidate(n: int, k: int) -> IntPoly:
    """
    The reduced polynomial of degree n with Julia set [-4/k, 0].

    Raises:
        PolynomialError: If k is not 1, 2, 3 or 4
    """
    if k not in SEGMENT_INDICES:
        raise PolynomialError(f"Segment index must be one of {SEGMENT_INDICES}, got {k}")
    return _as_reduced_poly(conjugate_coefficients(ConjugationParams.for_segment(n, k)))


def segment_candidates(n: int) -> Dict[int, IntPoly]:
    return {k: segment_candidate(n, k) for k in SEGMENT_INDICES}


def conjugacy_holds(p: IntPoly, n: int, k: int) -> bool:
    """
    Exact check of (k/2) P(z) + 1 = T_n((k/2) z + 1).

    Both sides are scaled by 2^n: 2^(n-1) (k P + 2) = sum_j t_j (k z + 2)^j 2^(n-j).
    """
    t = chebyshev(n)
    left = scale(add(scale(p, k), IntPoly.constant(2)), 2 ** (n - 1))
    right = IntPoly()
    inner = IntPoly((2, k))
    for j, tj in enumerate(t.coeffs):
        if tj:
            right = add(right, scale(power(inner, j), tj * 2 ** (n - j)))
    return left == right


def segment_edge_count(n: int, k: Union[int, Fraction]) -> Fraction:
    """a_2 of the segment candidate: (k / 12) n^2 (n^2 - 1)."""
    return Fraction(k) * n * n * (n * n - 1) / 12


def binomial_bound_holds(n: int) -> bool:
    """6^(n-1) < C(n^2, n)."""
    return 6 ** (n - 1) < comb(n * n, n)
