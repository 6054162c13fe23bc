"""
Attractor classification.

The class of a graph is decided exactly from its independence polynomial:

  * edgeless graphs have attractor {-1};
  * complete graphs (independence number 1) have attractor {0};
  * a graph on alpha^2 vertices whose reduced polynomial has the Chebyshev
    conjugate coefficients for a = k/2 has the segment [-4/k, 0]
    (its reduced polynomial is affinely conjugate to T_alpha, whose Julia
    set is [-1, 1]);
  * everything else is General. A circle never occurs as an attractor.

The multiplicity of -1 as a root of I_G fixes how attractor and fractal
relate. Backward orbits only corroborate a Segment result, they never
decide one.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Any, Dict, Iterable, List, Optional, Tuple

from .dynamics.hausdorff import hausdorff_to_segment
from .dynamics.orbit import backward_orbit
from .dynamics.roots import RootSolver
from .graphs.counting import independence_polynomial
from .graphs.graph import Graph, is_connected
from .polynomials.chebyshev import (
    SEGMENT_INDICES,
    ConjugationParams,
    conjugacy_holds,
    conjugate_coefficients,
    segment_candidate,
)
from .polynomials.intpoly import IntPoly, multiplicity_at, reduced
from .utils.error_handler import DynamicsError, PolynomialError, handle_computation_error

logger = logging.getLogger('indatt.classifier')

SCHEMA = "indatt/1"


class AttractorClass(Enum):
    POINT_ZERO = "PointZero"
    POINT_MINUS_ONE = "PointMinusOne"
    SEGMENT = "Segment"
    GENERAL = "General"


class FractalRelation(Enum):
    EQUAL = "equal"
    EQUAL_SIMPLE_ROOT = "equal-simple-root"
    DISJOINT_UNION = "disjoint-union"

    @classmethod
    def from_multiplicity(cls, multiplicity: int) -> "FractalRelation":
        if multiplicity == 0:
            return cls.EQUAL
        if multiplicity == 1:
            return cls.EQUAL_SIMPLE_ROOT
        return cls.DISJOINT_UNION


@dataclass(frozen=True)
class NumericDiagnostics:
    """Backward-orbit check of a Segment result; error is set when the orbit could not be computed."""

    depth: int
    cloud_size: int
    hausdorff_to_segment: Optional[float]
    thinned: bool
    error: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.error is not None


@dataclass(frozen=True)
class AttractorReport:
    """Classification of one graph."""

    alpha: int
    vertex_count: int
    klass: AttractorClass
    fractal_relation: FractalRelation
    minus_one_multiplicity: int
    k: Optional[int] = None
    connected: bool = True
    fractal_is_circle: bool = False
    numeric: Optional[NumericDiagnostics] = None

    def __post_init__(self):
        if self.klass is AttractorClass.SEGMENT:
            if self.k not in SEGMENT_INDICES:
                raise PolynomialError(f"Segment report needs k in {SEGMENT_INDICES}, got {self.k}")
            if self.alpha < 2 or self.vertex_count != self.alpha ** 2:
                raise PolynomialError("Segment report needs alpha >= 2 and alpha^2 vertices")
            if self.fractal_relation is FractalRelation.DISJOINT_UNION:
                raise PolynomialError("Segment attractor cannot have -1 as a multiple root")

    @property
    def segment(self) -> Optional[Tuple[Fraction, int]]:
        """(-4/k, 0) for a Segment report."""
        if self.klass is not AttractorClass.SEGMENT:
            return None
        return Fraction(-4, self.k), 0

    def segment_text(self) -> Optional[str]:
        if self.segment is None:
            return None
        left = self.segment[0]
        return f"[{left.numerator if left.denominator == 1 else left},0]"

    def as_dict(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA,
            "alpha": self.alpha,
            "class": self.klass.value,
            "k": self.k,
            "segment": self.segment_text(),
            "minusOneMultiplicity": self.minus_one_multiplicity,
            "fractalRelation": self.fractal_relation.value,
            "hausdorffToSegment": self.numeric.hausdorff_to_segment if self.numeric else None,
            "depth": self.numeric.depth if self.numeric else None,
            "corroborationError": self.numeric.error if self.numeric else None,
            "connected": self.connected,
            "fractalIsCircle": self.fractal_is_circle,
        }


@dataclass(frozen=True)
class ExclusionRecord:
    """Would-be complement statistics for a = 5/2 and the triangle bound they violate."""

    n: int
    N: int
    E: Fraction
    T: Fraction
    bound: Fraction
    violated: bool


def circle_check(p: IntPoly) -> bool:
    """
    True iff p = (1 + z)^n - 1 with n = degree(p) >= 2.

    Raises:
        PolynomialError: If p(0) != 0
    """
    if p.coefficient(0) != 0:
        raise PolynomialError(f"Reduced polynomial must vanish at 0: {p}")
    n = p.degree
    if n < 2:
        return False
    return all(p.coefficient(i) == comb(n, i) for i in range(1, n + 1))


def segment_index(i: IntPoly, vertex_count: int) -> Optional[int]:
    """k such that I - 1 is the degree-alpha segment candidate for k, if any."""
    alpha = i.degree
    if alpha < 2 or vertex_count != alpha * alpha:
        return None
    p = reduced(i)
    for k in SEGMENT_INDICES:
        if p == segment_candidate(alpha, k):
            return k
    return None


def exclude_k5(n: int) -> ExclusionRecord:
    """
    Complement counts that a = 5/2 would force, checked against the triangle bound.

    N = n^2, E = a_2 and T = a_3 of the a = 5/2 conjugate coefficients;
    violated is T < E (4E - N^2) / (3N).
    """
    coefficients = conjugate_coefficients(ConjugationParams(Fraction(5, 2), n))
    N = n * n
    E = coefficients[1]
    T = coefficients[2] if n >= 3 else Fraction(0)
    bound = E * (4 * E - N * N) / (3 * N)
    return ExclusionRecord(n=n, N=N, E=E, T=T, bound=bound, violated=T < bound)


class AttractorClassifier:
    """Exact classification with optional backward-orbit corroboration."""

    def __init__(self, config: Optional[Dict[str, Any]] = None, solver: Optional[RootSolver] = None,
                 threads: int = 1):
        """
        Initialize the classifier.

        Args:
            config: The 'classifier' config section (corroborate, depth, cap)
            solver: Root solver for corroboration
            threads: Worker threads for backward orbits
        """
        config = config or {}
        self.corroborate = config.get("corroborate", True)
        self.depth = config.get("depth", 10)
        self.cap = config.get("cap", 200000)
        self.solver = solver
        self.threads = threads

    @handle_computation_error('classifier')
    def report(self, g: Graph, corroborate: Optional[bool] = None) -> AttractorReport:
        corroborate = self.corroborate if corroborate is None else corroborate
        i = independence_polynomial(g)
        p = reduced(i)
        alpha = i.degree
        multiplicity = multiplicity_at(i, -1)
        relation = FractalRelation.from_multiplicity(multiplicity)
        k = None

        if g.edge_count() == 0:
            klass = AttractorClass.POINT_MINUS_ONE
        elif alpha == 1:
            klass = AttractorClass.POINT_ZERO
        else:
            k = segment_index(i, g.n)
            klass = AttractorClass.SEGMENT if k is not None else AttractorClass.GENERAL

        numeric = None
        if klass is AttractorClass.SEGMENT and corroborate:
            numeric = self.corroborate_segment(p, k)

        report = AttractorReport(
            alpha=alpha,
            vertex_count=g.n,
            klass=klass,
            fractal_relation=relation,
            minus_one_multiplicity=multiplicity,
            k=k,
            connected=is_connected(g),
            fractal_is_circle=circle_check(p),
            numeric=numeric,
        )
        logger.debug(f"{g!r}: {klass.value} k={k} multiplicity={multiplicity}")
        return report

    def corroborate_segment(self, p: IntPoly, k: int) -> NumericDiagnostics:
        """
        Backward orbit of -1 compared with the segment [-4/k, 0].

        A numerical failure is recorded in the diagnostics; the exact class
        stands either way.
        """
        try:
            orbit = backward_orbit(p, -1, depth=self.depth, cap=self.cap, threads=self.threads,
                                   solver=self.solver)
        except DynamicsError as e:
            logger.warning(f"Segment k={k}: backward orbit failed, exact class kept: {e.message}")
            return NumericDiagnostics(depth=self.depth, cloud_size=0, hausdorff_to_segment=None,
                                      thinned=False, error=e.message)
        distance = hausdorff_to_segment(orbit.final, 4 / k)
        logger.info(f"Segment k={k}: level {self.depth} has {len(orbit.final)} points, "
                    f"Hausdorff distance {distance:.3e}")
        return NumericDiagnostics(
            depth=self.depth,
            cloud_size=len(orbit.final),
            hausdorff_to_segment=distance,
            thinned=bool(orbit.thinned_levels),
        )


def attractor_report(g: Graph, corroborate: bool = True, depth: int = 10, cap: int = 200000) -> AttractorReport:
    return AttractorClassifier({"corroborate": corroborate, "depth": depth, "cap": cap}).report(g)


@dataclass
class SweepSummary:
    """Class counts over a corpus and any invariant violations found."""

    counts: Dict[str, int] = field(default_factory=dict)
    violations: List[str] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def classification_sweep(graphs: Iterable[Graph]) -> SweepSummary:
    """
    Classify a corpus exactly and check the segment invariants on every Segment result.
    """
    classifier = AttractorClassifier({"corroborate": False})
    summary = SweepSummary(counts={c.value: 0 for c in AttractorClass})
    for g in graphs:
        report = classifier.report(g)
        summary.counts[report.klass.value] += 1
        if report.klass is AttractorClass.SEGMENT:
            p = reduced(independence_polynomial(g))
            if not conjugacy_holds(p, report.alpha, report.k):
                summary.violations.append(f"conjugacy fails for {g!r}")
            if report.minus_one_multiplicity > 1:
                summary.violations.append(f"-1 is a multiple root for segment graph {g!r}")
    logger.info(f"Classified {summary.total} graphs: {summary.counts}")
    return summary
