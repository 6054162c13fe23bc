"""
Component analysis for disconnected segment graphs on 16 vertices.

A disconnected graph G with I_G = 1 + 16z + 20kz^2 + 8k^2z^3 + k^3z^4 splits
into components whose independence polynomials multiply to that quartic.
Each component shape gives a small Diophantine system:

  four-components      (1+n1 z)(1+n2 z)(1+n3 z)(1+n4 z)
  three-components     (1+n1 z)(1+n2 z)(1+n3 z+m z^2)
  two-components-22    (1+n1 z+m1 z^2)(1+n2 z+m2 z^2)
  two-components-13    (1+n1 z)(1+n2 z+m1 z^2+m2 z^3)

table_rows lists every candidate the product equation allows, with the
intermediate values and a verdict; solve_components keeps the possible ones.
Symmetric rows such as (9,1,3,12) and (9,3,1,12) are both kept.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..polynomials.chebyshev import SEGMENT_INDICES
from ..polynomials.factorization import factor_key, nontrivial_factorizations, product
from ..polynomials.intpoly import IntPoly, format_poly
from ..utils.error_handler import SearchError

logger = logging.getLogger('indatt.search.components')

VERTICES = 16

FOUR_COMPONENTS = "four-components"
THREE_COMPONENTS = "three-components"
TWO_COMPONENTS_22 = "two-components-22"
TWO_COMPONENTS_13 = "two-components-13"

CASES = (FOUR_COMPONENTS, THREE_COMPONENTS, TWO_COMPONENTS_22, TWO_COMPONENTS_13)

CASE_ALIASES = {
    "4comp": FOUR_COMPONENTS,
    "3comp": THREE_COMPONENTS,
    "22": TWO_COMPONENTS_22,
    "13": TWO_COMPONENTS_13,
}

# Factor degrees of each case, smallest first
DEGREE_PATTERNS = {
    FOUR_COMPONENTS: (1, 1, 1, 1),
    THREE_COMPONENTS: (1, 1, 2),
    TWO_COMPONENTS_22: (2, 2),
    TWO_COMPONENTS_13: (1, 3),
}

HEADERS = {
    FOUR_COMPONENTS: ("n1", "n2", "n3", "n4", "n1+n2+n3+n4"),
    THREE_COMPONENTS: ("m", "n1", "n2", "n3=16-n1-n2", "n1n2n3+mn1+mn2", "n1n2+n1n3+n2n3+m"),
    TWO_COMPONENTS_22: ("m1", "m2", "n1=(8k^2-16m1)/(m2-m1)", "n2", "n1n2+m1+m2"),
    TWO_COMPONENTS_13: ("n1", "m2", "n2=16-n1", "m1=20k-n1n2", "n1m1+m2"),
}

Cell = Union[int, Fraction, None]


def resolve_case(name: str) -> str:
    """
    Full case name for a case name or CLI alias.

    Raises:
        SearchError: If the name is unknown
    """
    case = CASE_ALIASES.get(name, name)
    if case not in CASES:
        raise SearchError(f"Unknown component case '{name}'",
                          details={"known": list(CASES) + list(CASE_ALIASES)})
    return case


def quartic(k: int) -> IntPoly:
    """1 + 16z + 20kz^2 + 8k^2z^3 + k^3z^4"""
    _check_k(k)
    return IntPoly((1, VERTICES, 20 * k, 8 * k * k, k ** 3))


def _check_k(k: int) -> None:
    if k not in SEGMENT_INDICES:
        raise SearchError(f"Segment index must be one of {SEGMENT_INDICES}, got {k}")


def _divisor_pairs(n: int) -> List[Tuple[int, int]]:
    """(a, b) with a * b = n, a descending."""
    return [(a, n // a) for a in range(n, 0, -1) if n % a == 0]


def _linear(n: int) -> IntPoly:
    return IntPoly((1, n))


def _quadratic(n: int, m: int) -> IntPoly:
    return IntPoly((1, n, m))


def _cubic(n: int, m1: int, m2: int) -> IntPoly:
    return IntPoly((1, n, m1, m2))


@dataclass(frozen=True)
class ComponentSolution:
    """
    One possible component split.

    params follow the case: (n1,n2,n3,n4), (m,n1,n2,n3), (m1,m2,n1,n2) or
    (n1,m2,n2,m1).
    """

    case_kind: str
    k: int
    params: Tuple[int, ...]
    factors: Tuple[IntPoly, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.params):
            raise SearchError(f"Component parameters must be positive: {self.params}")
        if product(self.factors) != quartic(self.k):
            raise SearchError(
                f"Factors {self.product_text()} do not multiply to {format_poly(quartic(self.k))}",
                details={"case": self.case_kind, "k": self.k, "params": self.params}
            )

    def factor_multiset(self) -> Tuple[IntPoly, ...]:
        return tuple(sorted(self.factors, key=factor_key))

    def product_text(self) -> str:
        return "".join(f"({format_poly(f)})" for f in self.factors)


@dataclass(frozen=True)
class TableRow:
    """A candidate row: cells in column order, '-' cells as None."""

    case_kind: str
    k: int
    cells: Tuple[Cell, ...]
    solution: Optional[ComponentSolution] = None

    @property
    def possible(self) -> bool:
        return self.solution is not None

    @property
    def verdict(self) -> str:
        return self.solution.product_text() if self.solution else "Not possible"

    def cell_texts(self) -> List[str]:
        texts = []
        for cell in self.cells:
            if cell is None:
                texts.append("-")
            elif isinstance(cell, Fraction) and cell.denominator != 1:
                texts.append(f"{cell.numerator}/{cell.denominator}")
            else:
                texts.append(str(int(cell)))
        return texts


def _four_rows(k: int) -> List[TableRow]:
    target = quartic(k)
    rows = []
    for ns in itertools.combinations_with_replacement(range(1, VERTICES + 1), 4):
        if ns[0] * ns[1] * ns[2] * ns[3] != k ** 3:
            continue
        total = sum(ns)
        solution = None
        factors = tuple(_linear(n) for n in ns)
        if total == VERTICES and product(factors) == target:
            solution = ComponentSolution(FOUR_COMPONENTS, k, ns, factors)
        rows.append(TableRow(FOUR_COMPONENTS, k, ns + (total,), solution))
    return rows


def _three_rows(k: int) -> List[TableRow]:
    rows = []
    for m, rest in _divisor_pairs(k ** 3):
        for n1, n2 in _divisor_pairs(rest):
            n3 = VERTICES - n1 - n2
            if n3 < 1:
                continue
            cubic_term = n1 * n2 * n3 + m * n1 + m * n2
            quadratic_term = None
            solution = None
            if cubic_term == 8 * k * k:
                quadratic_term = n1 * n2 + n1 * n3 + n2 * n3 + m
                if quadratic_term == 20 * k:
                    factors = (_linear(n1), _linear(n2), _quadratic(n3, m))
                    solution = ComponentSolution(THREE_COMPONENTS, k, (m, n1, n2, n3), factors)
            rows.append(TableRow(THREE_COMPONENTS, k, (m, n1, n2, n3, cubic_term, quadratic_term), solution))
    return rows


def _two_22_rows(k: int) -> List[TableRow]:
    rows = []
    for m1, m2 in _divisor_pairs(k ** 3):
        if m1 != m2:
            candidates: Sequence[Cell] = [Fraction(8 * k * k - 16 * m1, m2 - m1)]
        elif 16 * m1 == 8 * k * k:
            # Equal m: the cubic equation holds for every n1
            candidates = [n1 for n1 in range(1, VERTICES) if n1 * (VERTICES - n1) + 2 * m1 == 20 * k]
            candidates = candidates or [None]
        else:
            candidates = [None]
        for n1 in candidates:
            if n1 is None or n1.denominator != 1 or not 1 <= n1 < VERTICES:
                rows.append(TableRow(TWO_COMPONENTS_22, k, (m1, m2, n1, None, None)))
                continue
            n1 = int(n1)
            n2 = VERTICES - n1
            quadratic_term = n1 * n2 + m1 + m2
            solution = None
            if quadratic_term == 20 * k:
                factors = (_quadratic(n1, m1), _quadratic(n2, m2))
                solution = ComponentSolution(TWO_COMPONENTS_22, k, (m1, m2, n1, n2), factors)
            rows.append(TableRow(TWO_COMPONENTS_22, k, (m1, m2, n1, n2, quadratic_term), solution))
    return rows


def _two_13_rows(k: int) -> List[TableRow]:
    rows = []
    for n1, m2 in _divisor_pairs(k ** 3):
        if n1 >= VERTICES:
            continue
        n2 = VERTICES - n1
        m1 = 20 * k - n1 * n2
        cubic_term = None
        solution = None
        if m1 >= 1:
            cubic_term = n1 * m1 + m2
            if cubic_term == 8 * k * k:
                factors = (_linear(n1), _cubic(n2, m1, m2))
                solution = ComponentSolution(TWO_COMPONENTS_13, k, (n1, m2, n2, m1), factors)
        rows.append(TableRow(TWO_COMPONENTS_13, k, (n1, m2, n2, m1, cubic_term), solution))
    return rows


_ROW_BUILDERS = {
    FOUR_COMPONENTS: _four_rows,
    THREE_COMPONENTS: _three_rows,
    TWO_COMPONENTS_22: _two_22_rows,
    TWO_COMPONENTS_13: _two_13_rows,
}


def table_rows(case: str, k: int) -> List[TableRow]:
    """
    Every candidate row for the case, in HEADERS column order.

    Raises:
        SearchError: If the case is unknown or k is not 1..4
    """
    case = resolve_case(case)
    _check_k(k)
    rows = _ROW_BUILDERS[case](k)
    logger.debug(f"{case} k={k}: {len(rows)} candidate rows, "
                 f"{sum(r.possible for r in rows)} possible")
    return rows


def solve_components(case: str, k: int) -> List[ComponentSolution]:
    """Possible rows of table_rows(case, k), sorted by params."""
    solutions = [row.solution for row in table_rows(case, k) if row.solution is not None]
    return sorted(solutions, key=lambda s: s.params)


def dedup_solutions(solutions: Sequence[ComponentSolution]) -> List[ComponentSolution]:
    """Keep the first solution of each factor multiset."""
    seen = set()
    kept = []
    for solution in solutions:
        key = (solution.case_kind, solution.factor_multiset())
        if key not in seen:
            seen.add(key)
            kept.append(solution)
    return kept


def all_solutions(k: int, dedup: bool = False) -> List[ComponentSolution]:
    solutions = [s for case in CASES for s in solve_components(case, k)]
    return dedup_solutions(solutions) if dedup else solutions


@dataclass
class CrossCheck:
    """Factor multisets per case from the solver and from generic factorization."""

    k: int
    solver: Dict[str, List[Tuple[IntPoly, ...]]] = field(default_factory=dict)
    oracle: Dict[str, List[Tuple[IntPoly, ...]]] = field(default_factory=dict)
    unmatched: List[Tuple[IntPoly, ...]] = field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return not self.unmatched and self.solver == self.oracle


def cross_check(k: int) -> CrossCheck:
    """
    Compare solve_components with factorizations_positive on quartic(k).

    Every nontrivial factorization must match exactly one case's degree
    pattern; any that matches none is reported in unmatched.
    """
    check = CrossCheck(k)
    by_pattern = {pattern: case for case, pattern in DEGREE_PATTERNS.items()}
    for case in CASES:
        multisets = {s.factor_multiset() for s in solve_components(case, k)}
        check.solver[case] = sorted(multisets, key=lambda fs: [factor_key(f) for f in fs])
        check.oracle[case] = []
    for factors in nontrivial_factorizations(quartic(k), max_factors=4):
        case = by_pattern.get(tuple(f.degree for f in factors))
        if case is None:
            check.unmatched.append(factors)
        else:
            check.oracle[case].append(factors)
    for case in CASES:
        check.oracle[case].sort(key=lambda fs: [factor_key(f) for f in fs])
    if not check.agrees:
        logger.warning(f"Component solver and factorization disagree for k={k}")
    return check
