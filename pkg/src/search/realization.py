"""
Realizing component splits by actual graphs.

Each factor of a component split must be the independence polynomial of a
connected graph. Linear factors 1 + n z are realized only by K_n; the
others go through complement enumeration, which is capped, so a factor can
come back undetermined.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence

from .components import ComponentSolution, all_solutions, quartic
from .enumeration import DEFAULT_MAX_VERTICES, enumerate_realizations
from ..graphs.counting import independence_polynomial
from ..graphs.graph import Graph, complete_graph, disjoint_union
from ..polynomials.factorization import factor_key
from ..polynomials.intpoly import IntPoly, format_poly
from ..utils.error_handler import EnumerationCapError, GraphInvariantError

logger = logging.getLogger('indatt.search.realization')


class Verdict(Enum):
    REALIZABLE = "realizable"
    NOT_REALIZABLE = "not-realizable"
    UNDETERMINED = "undetermined"


@dataclass
class FactorRealization:
    """Connected graphs whose independence polynomial is one factor."""

    factor: IntPoly
    verdict: Verdict
    graphs: List[Graph] = field(default_factory=list)
    reason: Optional[str] = None

    @property
    def count(self) -> Optional[int]:
        return None if self.verdict is Verdict.UNDETERMINED else len(self.graphs)


@dataclass
class Realization:
    """A component split together with the verdict for each distinct factor."""

    solution: ComponentSolution
    factors: List[FactorRealization]

    @property
    def verdict(self) -> Verdict:
        verdicts = {f.verdict for f in self.factors}
        if Verdict.NOT_REALIZABLE in verdicts:
            return Verdict.NOT_REALIZABLE
        if Verdict.UNDETERMINED in verdicts:
            return Verdict.UNDETERMINED
        return Verdict.REALIZABLE

    def counts(self) -> Dict[IntPoly, int]:
        return {f.factor: f.count for f in self.factors if f.count is not None}

    @property
    def graph_count(self) -> Optional[int]:
        """Non-isomorphic disconnected graphs for this split, None unless realizable."""
        if self.verdict is not Verdict.REALIZABLE:
            return None
        return count_disconnected(self.solution.factors, self.counts())

    def examples(self, limit: Optional[int] = None) -> Iterator[Graph]:
        """
        Disjoint unions of realizing components, one per unordered choice.

        Raises:
            GraphInvariantError: If a union does not have the quartic as its
                independence polynomial
        """
        if self.verdict is not Verdict.REALIZABLE:
            return
        by_factor = {f.factor: f.graphs for f in self.factors}
        multiplicities = Counter(self.solution.factors)
        choices = [
            list(itertools.combinations_with_replacement(by_factor[factor], r))
            for factor, r in sorted(multiplicities.items(), key=lambda item: factor_key(item[0]))
        ]
        target = quartic(self.solution.k)
        for produced, picks in enumerate(itertools.product(*choices)):
            if limit is not None and produced >= limit:
                return
            parts = [g for group in picks for g in group]
            union = parts[0]
            for part in parts[1:]:
                union = disjoint_union(union, part)
            if independence_polynomial(union) != target:
                raise GraphInvariantError(
                    f"Union of components has I = {format_poly(independence_polynomial(union))}, "
                    f"expected {format_poly(target)}"
                )
            yield union


def count_disconnected(factors: Sequence[IntPoly], counts: Dict[IntPoly, int]) -> int:
    """
    Number of non-isomorphic graphs whose components realize the factors.

    A factor repeated r times with N connected realizations contributes
    C(N + r - 1, r) unordered choices.
    """
    total = 1
    for factor, r in Counter(factors).items():
        total *= comb(counts[factor] + r - 1, r)
    return total


def realize_factor(factor: IntPoly, max_vertices: int = DEFAULT_MAX_VERTICES,
                   progress: bool = False) -> FactorRealization:
    """Connected realizations of one factor, or an undetermined verdict past the cap."""
    if factor.degree == 1:
        return FactorRealization(factor, Verdict.REALIZABLE, [complete_graph(factor.coefficient(1))])
    try:
        graphs = enumerate_realizations(factor, co_connected=True, max_vertices=max_vertices, progress=progress)
    except EnumerationCapError as e:
        logger.warning(f"{format_poly(factor)}: {e.message}; verdict undetermined")
        return FactorRealization(factor, Verdict.UNDETERMINED, reason=e.message)
    verdict = Verdict.REALIZABLE if graphs else Verdict.NOT_REALIZABLE
    logger.info(f"{format_poly(factor)}: {len(graphs)} connected realizations")
    return FactorRealization(factor, verdict, graphs)


def realize_disconnected(k: int, max_vertices: int = DEFAULT_MAX_VERTICES,
                         progress: bool = False) -> List[Realization]:
    """
    Every component split for segment index k with a verdict per factor.

    Args:
        k: Segment index 1..4
        max_vertices: Enumeration cap per factor
        progress: Show enumeration progress bars

    Returns:
        List[Realization]: One entry per distinct factor multiset, empty for k = 1, 2
    """
    cache: Dict[IntPoly, FactorRealization] = {}
    realizations = []
    for solution in all_solutions(k, dedup=True):
        distinct = sorted(set(solution.factors), key=factor_key)
        for factor in distinct:
            if factor not in cache:
                cache[factor] = realize_factor(factor, max_vertices, progress)
        realizations.append(Realization(solution, [cache[f] for f in distinct]))
    logger.info(f"k={k}: {len(realizations)} component splits")
    return realizations
