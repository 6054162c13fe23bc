"""
Factorization into polynomials with positive integer coefficients.

Only factors with constant term 1 are considered. Every coefficient of such
a factor is bounded by the matching coefficient of the target, so the
search is finite.
"""

import itertools
import logging
from typing import List, Optional, Sequence, Tuple

from .intpoly import IntPoly, multiply
from ..utils.error_handler import FactorizationError

logger = logging.getLogger('indatt.polynomials.factorization')

MAX_FACTOR_DEGREE = 6

Factorization = Tuple[IntPoly, ...]


def factor_key(p: IntPoly) -> Tuple[int, Tuple[int, ...]]:
    """Canonical factor order: by degree, then by coefficient vector."""
    return p.degree, p.coeffs


def _divisors(n: int) -> List[int]:
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def divide_positive(target: IntPoly, factor: IntPoly) -> Optional[IntPoly]:
    """
    Exact quotient target / factor when it exists and has only positive coefficients.

    factor must have constant term 1, so the power-series division stays in
    the integers.
    """
    t, f = target.coeffs, factor.coeffs
    qdeg = len(t) - len(f)
    if qdeg < 0:
        return None
    quotient = []
    for i in range(qdeg + 1):
        c = t[i] - sum(f[j] * quotient[i - j] for j in range(1, min(i, len(f) - 1) + 1))
        if c <= 0:
            return None
        quotient.append(c)
    q = IntPoly(tuple(quotient))
    if multiply(q, factor) != target:
        return None
    return q


def _candidate_factors(rem: IntPoly, degree: int):
    """Positive factors of the given degree with a0 = 1, bounded coordinatewise by rem."""
    ranges = [range(1, rem.coeffs[i] + 1) for i in range(1, degree)]
    leads = [d for d in _divisors(rem.leading) if d <= rem.coeffs[degree]]
    for middle in itertools.product(*ranges):
        for lead in leads:
            yield IntPoly((1,) + middle + (lead,))


def _validate(target: IntPoly) -> None:
    if target.degree < 1:
        raise FactorizationError(f"Cannot factor a constant: {target}")
    if target.degree > MAX_FACTOR_DEGREE:
        raise FactorizationError(
            f"Factorization is limited to degree {MAX_FACTOR_DEGREE}, got {target.degree}",
            details={"degree": target.degree}
        )
    if target.coefficient(0) != 1 or not target.has_positive_coefficients():
        raise FactorizationError(
            f"Target must have constant term 1 and positive coefficients: {target}"
        )


def factorizations_positive(target: IntPoly, max_factors: int = MAX_FACTOR_DEGREE) -> List[Factorization]:
    """
    Every multiset of positive factors (a0 = 1, degree >= 1) whose product is target.

    The single-factor multiset (target,) is included; a factorization is
    nontrivial when it has at least two factors. Factors inside a multiset
    and the multisets themselves are sorted by factor_key.

    Args:
        target: Polynomial with a0 = 1, positive coefficients, degree <= 6
        max_factors: Largest multiset size to return

    Raises:
        FactorizationError: If target is outside the supported range
    """
    _validate(target)
    results: List[Factorization] = []

    def search(rem: IntPoly, prefix: Tuple[IntPoly, ...]) -> None:
        lower = factor_key(prefix[-1]) if prefix else None
        if lower is None or factor_key(rem) >= lower:
            results.append(prefix + (rem,))
        if len(prefix) + 2 > max_factors:
            return
        # The smallest factor has at most half the remaining degree
        for degree in range(1, rem.degree // 2 + 1):
            for factor in _candidate_factors(rem, degree):
                if lower is not None and factor_key(factor) < lower:
                    continue
                quotient = divide_positive(rem, factor)
                if quotient is None or factor_key(quotient) < factor_key(factor):
                    continue
                search(quotient, prefix + (factor,))

    search(target, ())
    results = sorted(set(results), key=lambda fs: (len(fs), [factor_key(f) for f in fs]))
    logger.debug(f"{target}: {len(results)} positive factorizations")
    return results


def nontrivial_factorizations(target: IntPoly, max_factors: int = MAX_FACTOR_DEGREE) -> List[Factorization]:
    return [fs for fs in factorizations_positive(target, max_factors) if len(fs) >= 2]


def product(factors: Sequence[IntPoly]) -> IntPoly:
    result = IntPoly.constant(1)
    for f in factors:
        result = multiply(result, f)
    return result
