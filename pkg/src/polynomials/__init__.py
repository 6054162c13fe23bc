"""
Polynomial core: exact integer polynomials, positive factorizations and Chebyshev machinery.
"""

from .intpoly import (
    IntPoly,
    add,
    compose,
    derivative,
    derivative_k,
    estimate_iterate_digits,
    evaluate,
    evaluate_exact,
    format_poly,
    iterate,
    multiplicity_at,
    multiply,
    parse_poly,
    power,
    reduced,
    scale,
    set_max_coefficient_digits,
    subtract,
)
from .factorization import factorizations_positive, nontrivial_factorizations
from .chebyshev import (
    ConjugationParams,
    cheb_derivative_at_one,
    chebyshev,
    conjugacy_holds,
    conjugate_coefficients,
    segment_candidate,
    segment_candidates,
)
