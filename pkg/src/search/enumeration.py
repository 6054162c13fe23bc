"""
Isomorph-free enumeration of small graphs.

Graphs are grown one edge at a time. Every level keeps a single canonical
representative per isomorphism class, so level e holds exactly the classes
with e edges that survive the pruning rules. Triangle and K4 counts only
grow when an edge is added, and a disconnected complement stays
disconnected, so partial graphs over budget are dropped early.
"""

import logging
import sys
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional

from tqdm import tqdm

from ..graphs.canonical import MAX_CANONICAL_VERTICES, canonical_pair
from ..graphs.counting import count_k4, count_triangles, independence_polynomial, new_k4, new_triangles
from ..graphs.graph import Graph, add_edge, complement, empty_graph, is_connected
from ..graphs.graph6 import write_graph6
from ..polynomials.intpoly import IntPoly, format_poly
from ..utils.error_handler import EnumerationCapError, SearchError

logger = logging.getLogger('indatt.search.enumeration')

DEFAULT_MAX_VERTICES = 12


@dataclass(frozen=True)
class EnumConstraints:
    """
    Complement-side counts for a target independence polynomial.

    The enumerated graphs are complements of the graphs that realize the
    target: their edges, triangles and 4-cliques are the target's a2, a3, a4.
    """

    vertices: int
    complement_edges: int
    complement_triangles: int = 0
    complement_k4: int = 0
    require_co_connected: bool = False

    def __post_init__(self):
        if self.vertices < 1:
            raise SearchError(f"Need at least one vertex, got {self.vertices}")
        if min(self.complement_edges, self.complement_triangles, self.complement_k4) < 0:
            raise SearchError(f"Counts must be non-negative: {self}")
        if self.complement_edges > comb(self.vertices, 2):
            raise SearchError(
                f"{self.complement_edges} edges do not fit on {self.vertices} vertices",
                details={"max_edges": comb(self.vertices, 2)}
            )

    def check_cap(self, max_vertices: int) -> None:
        if self.vertices > max_vertices:
            raise EnumerationCapError(
                f"Enumeration is capped at {max_vertices} vertices, got {self.vertices}",
                details={"vertices": self.vertices, "cap": max_vertices}
            )


def constraints_from_poly(target: IntPoly, co_connected: bool = False) -> EnumConstraints:
    """
    Constraints whose enumerated graphs complement to graphs with I = target.

    Raises:
        SearchError: If target is not 1 + N z + ... of degree 1..4
    """
    if target.coefficient(0) != 1 or not 1 <= target.degree <= 4 or not target.has_positive_coefficients():
        raise SearchError(
            f"Target must be 1 + N z + ... with positive coefficients and degree 1..4: {format_poly(target)}"
        )
    return EnumConstraints(
        vertices=target.coefficient(1),
        complement_edges=target.coefficient(2),
        complement_triangles=target.coefficient(3),
        complement_k4=target.coefficient(4),
        require_co_connected=co_connected,
    )


@dataclass(frozen=True)
class _Partial:
    graph: Graph
    triangles: int
    k4: int


def _grow(level: Dict[bytes, _Partial], constraints: Optional[EnumConstraints]) -> Dict[bytes, _Partial]:
    """All classes reachable by adding one edge, within the triangle and K4 budgets."""
    grown: Dict[bytes, _Partial] = {}
    for partial in level.values():
        g = partial.graph
        for u, v in g.non_edges():
            triangles = partial.triangles + new_triangles(g, u, v)
            k4 = partial.k4 + new_k4(g, u, v)
            if constraints is not None and (triangles > constraints.complement_triangles
                                            or k4 > constraints.complement_k4):
                continue
            child = add_edge(g, u, v)
            if constraints is not None and constraints.require_co_connected and not is_connected(complement(child)):
                continue
            form, representative = canonical_pair(child)
            if form not in grown:
                grown[form] = _Partial(representative, triangles, k4)
    return grown


def _sorted_graphs(graphs: List[Graph]) -> List[Graph]:
    return sorted(graphs, key=write_graph6)


def enumerate_complements(constraints: EnumConstraints, target: Optional[IntPoly] = None,
                          max_vertices: int = DEFAULT_MAX_VERTICES, progress: bool = False) -> List[Graph]:
    """
    Every isomorphism class of graphs meeting the constraints, sorted by graph6.

    Args:
        constraints: Vertex, edge, triangle and K4 counts
        target: If given, keep only graphs whose complement has exactly this
            independence polynomial
        max_vertices: Vertex cap
        progress: Show a tqdm bar over edge levels on stderr

    Returns:
        List[Graph]: Canonical representatives

    Raises:
        EnumerationCapError: If the constraints exceed the cap
    """
    constraints.check_cap(min(max_vertices, MAX_CANONICAL_VERTICES))
    start = empty_graph(constraints.vertices)
    level = {canonical_pair(start)[0]: _Partial(start, 0, 0)}
    if constraints.require_co_connected and not is_connected(complement(start)):
        level = {}

    levels = tqdm(range(constraints.complement_edges), desc="edge levels", unit="level",
                  file=sys.stderr, disable=not progress)
    for e in levels:
        level = _grow(level, constraints)
        logger.info(f"N={constraints.vertices}: {len(level)} classes with {e + 1} edges")
        if not level:
            break

    result = [
        p.graph for p in level.values()
        if p.triangles == constraints.complement_triangles and p.k4 == constraints.complement_k4
    ]
    if target is not None:
        result = [g for g in result if independence_polynomial(complement(g)) == target]
    logger.info(f"Enumerated {len(result)} graphs for {constraints}")
    return _sorted_graphs(result)


def enumerate_realizations(target: IntPoly, co_connected: bool = True,
                           max_vertices: int = DEFAULT_MAX_VERTICES, progress: bool = False) -> List[Graph]:
    """Graphs G (not complements) with I_G = target, connected when co_connected."""
    constraints = constraints_from_poly(target, co_connected)
    found = enumerate_complements(constraints, target=target, max_vertices=max_vertices, progress=progress)
    return _sorted_graphs([complement(g) for g in found])


def enumerate_graphs(n: int, progress: bool = False) -> List[Graph]:
    """
    All isomorphism classes on n vertices, sorted by graph6.

    Levels are grown up to half the possible edges; denser classes are the
    complements of sparser ones.

    Raises:
        EnumerationCapError: If n exceeds the canonical-form limit
    """
    if n < 1:
        raise SearchError(f"Need at least one vertex, got {n}")
    if n > MAX_CANONICAL_VERTICES:
        raise EnumerationCapError(f"Enumeration is capped at {MAX_CANONICAL_VERTICES} vertices, got {n}")
    pairs = comb(n, 2)
    start = empty_graph(n)
    level = {canonical_pair(start)[0]: _Partial(start, 0, 0)}
    graphs = [start]
    if pairs > 0:
        graphs.append(complement(start))

    for e in tqdm(range(1, pairs // 2 + 1), desc=f"graphs on {n}", unit="level",
                  file=sys.stderr, disable=not progress):
        level = _grow(level, None)
        for partial in level.values():
            graphs.append(partial.graph)
            if 2 * e != pairs:
                graphs.append(complement(partial.graph))
    logger.info(f"{len(graphs)} graphs on {n} vertices")
    return _sorted_graphs(graphs)


def verify_enumeration(graphs: List[Graph], constraints: EnumConstraints) -> List[str]:
    """Re-measure every graph; returns a message per mismatch or duplicate class."""
    problems = []
    forms = set()
    for g in graphs:
        label = write_graph6(g)
        if g.n != constraints.vertices or g.edge_count() != constraints.complement_edges:
            problems.append(f"{label}: wrong size")
        if count_triangles(g) != constraints.complement_triangles:
            problems.append(f"{label}: wrong triangle count")
        if count_k4(g) != constraints.complement_k4:
            problems.append(f"{label}: wrong K4 count")
        if constraints.require_co_connected and not is_connected(complement(g)):
            problems.append(f"{label}: complement is disconnected")
        form = canonical_pair(g)[0]
        if form in forms:
            problems.append(f"{label}: duplicate isomorphism class")
        forms.add(form)
    return problems
