"""
Fixed-point classification by the multiplier p'(z0).
"""

import logging
from dataclasses import dataclass
from enum import Enum

from .point_cloud import DEFAULT_TOL, PointCloud
from .roots import RootSolver
from ..polynomials.intpoly import IntPoly, derivative, evaluate, subtract
from ..utils.error_handler import FixedPointError

logger = logging.getLogger('indatt.dynamics.fixed_points')

FIXED_TOL = 1e-9
MULTIPLIER_TOL = 1e-9
ROOT_OF_UNITY_TOL = 1e-6
MAX_ROOT_OF_UNITY_ORDER = 64


class FixedPointKind(Enum):
    ATTRACTING = "attracting"
    SUPER_ATTRACTING = "super-attracting"
    REPELLING = "repelling"
    RATIONALLY_INDIFFERENT = "rationally-indifferent"
    IRRATIONALLY_INDIFFERENT = "irrationally-indifferent"


@dataclass(frozen=True)
class FixedPointClass:
    kind: FixedPointKind
    multiplier: complex


def classify_fixed_point(p: IntPoly, z0: complex) -> FixedPointClass:
    """
    Classify z0 by |lambda|, lambda = p'(z0).

    Super-attracting if |lambda| <= 1e-9, attracting below 1 - 1e-9,
    repelling above 1 + 1e-9; otherwise indifferent, rational when
    lambda^q is within 1e-6 of 1 for some q <= 64.

    Raises:
        FixedPointError: If |p(z0) - z0| > 1e-9
    """
    z0 = complex(z0)
    gap = abs(evaluate(p, z0) - z0)
    if gap > FIXED_TOL:
        raise FixedPointError(f"{z0} is not a fixed point: |p(z0) - z0| = {gap:.3e}",
                              details={"z0": z0, "gap": gap})
    multiplier = evaluate(derivative(p), z0)
    size = abs(multiplier)
    if size <= MULTIPLIER_TOL:
        kind = FixedPointKind.SUPER_ATTRACTING
    elif size < 1 - MULTIPLIER_TOL:
        kind = FixedPointKind.ATTRACTING
    elif size > 1 + MULTIPLIER_TOL:
        kind = FixedPointKind.REPELLING
    elif any(abs(multiplier ** q - 1) <= ROOT_OF_UNITY_TOL for q in range(1, MAX_ROOT_OF_UNITY_ORDER + 1)):
        kind = FixedPointKind.RATIONALLY_INDIFFERENT
    else:
        kind = FixedPointKind.IRRATIONALLY_INDIFFERENT
    logger.debug(f"Fixed point {z0}: {kind.value}, multiplier {multiplier}")
    return FixedPointClass(kind, multiplier)


def fixed_points(p: IntPoly, tol: float = DEFAULT_TOL) -> PointCloud:
    """Roots of p(z) - z."""
    return RootSolver(residual_tol=tol).roots(subtract(p, IntPoly.identity()), tol)
