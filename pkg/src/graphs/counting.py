"""
Counting Module
Independence polynomials and the subgraph counts behind the triangle bound.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from .graph import Graph, bits, component_masks, popcount
from ..polynomials.intpoly import IntPoly
from ..utils.error_handler import GraphSizeError

logger = logging.getLogger('indatt.graphs.counting')

BRUTEFORCE_LIMIT = 24

Coeffs = Tuple[int, ...]


def _poly_add_shifted(a: Coeffs, b: Coeffs) -> Coeffs:
    """a + z*b"""
    out = list(a) + [0] * max(0, len(b) + 1 - len(a))
    for i, c in enumerate(b):
        out[i + 1] += c
    return tuple(out)


def _poly_mul(a: Coeffs, b: Coeffs) -> Coeffs:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


class _IndependenceCounter:
    """Memoized branching I_G = I_{G-v} + z * I_{G-N[v]} on surviving-vertex bitsets."""

    def __init__(self, g: Graph):
        self.adj = g.adj
        self.memo: Dict[int, Coeffs] = {}

    def count(self, mask: int) -> Coeffs:
        if mask == 0:
            return (1,)
        cached = self.memo.get(mask)
        if cached is not None:
            return cached

        low = mask & -mask
        if mask == low:
            result = (1, 1)
        else:
            result = self._count_connected_or_split(mask)
        self.memo[mask] = result
        return result

    def _count_connected_or_split(self, mask: int) -> Coeffs:
        adj = self.adj
        # Component of the lowest vertex
        frontier = mask & -mask
        seen = frontier
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= adj[v]
            frontier = reach & mask & ~seen
            seen |= frontier
        if seen != mask:
            return _poly_mul(self.count(seen), self.count(mask & ~seen))

        size = popcount(mask)
        best, best_degree, min_degree = -1, -1, size
        for v in bits(mask):
            d = popcount(adj[v] & mask)
            if d > best_degree:
                best, best_degree = v, d
            min_degree = min(min_degree, d)
        if min_degree == size - 1:
            return (1, size)

        without = self.count(mask & ~(1 << best))
        closed = self.count(mask & ~(adj[best] | (1 << best)))
        return _poly_add_shifted(without, closed)


def independence_polynomial(g: Graph) -> IntPoly:
    """
    I_G(z) = sum over independent sets S of z^|S|.

    Branches on a maximum-degree vertex (lowest index on ties), splits
    connected components and closes cliques as 1 + |S| z.
    """
    counter = _IndependenceCounter(g)
    result = counter.count(g.all_vertices)
    logger.debug(f"Independence polynomial of {g!r}: {len(counter.memo)} memoized states")
    return IntPoly(result)


def independence_polynomial_bruteforce(g: Graph) -> IntPoly:
    """
    Oracle: enumerate every independent set directly.

    Raises:
        GraphSizeError: If g has more than 24 vertices
    """
    if g.n > BRUTEFORCE_LIMIT:
        raise GraphSizeError(f"Brute-force counting is limited to {BRUTEFORCE_LIMIT} vertices, got {g.n}")
    counts = [0] * (g.n + 1)
    adj = g.adj

    # Each independent set is visited once: extend only with larger vertices
    stack = [(0, g.all_vertices)]
    while stack:
        size, allowed = stack.pop()
        counts[size] += 1
        for v in bits(allowed):
            higher = allowed & ~((1 << (v + 1)) - 1)
            stack.append((size + 1, higher & ~adj[v]))
    return IntPoly(tuple(counts))


def independence_number(g: Graph) -> int:
    return independence_polynomial(g).degree


@dataclass(frozen=True)
class GraphStats:
    """Vertex, edge, triangle and K4 counts with the edge-local counts T1, T2."""

    N: int
    E: int
    T: int
    K4: int
    degrees: List[int] = field(default_factory=list)
    sumDegSq: int = 0
    T1: int = 0
    T2: int = 0

    def edge_identity_holds(self) -> bool:
        """T1 + 2 T2 + 3 T = (N - 2) E"""
        return self.T1 + 2 * self.T2 + 3 * self.T == (self.N - 2) * self.E

    def degree_identity_holds(self) -> bool:
        """2 T2 + 6 T = -2 E + sum deg^2"""
        return 2 * self.T2 + 6 * self.T == -2 * self.E + self.sumDegSq

    def triangle_bound(self) -> Fraction:
        """E (4E - N^2) / (3N); a lower bound for T whenever 4E > N^2."""
        return Fraction(self.E * (4 * self.E - self.N ** 2), 3 * self.N)

    def triangle_bound_holds(self) -> bool:
        if 4 * self.E <= self.N ** 2:
            return True
        return self.T >= self.triangle_bound()

    def as_dict(self) -> Dict[str, object]:
        return {
            "N": self.N, "E": self.E, "T": self.T, "K4": self.K4,
            "degrees": list(self.degrees), "sumDegSq": self.sumDegSq,
            "T1": self.T1, "T2": self.T2,
        }


def count_triangles(g: Graph) -> int:
    total = 0
    for u, v in g.edges():
        total += popcount(g.adj[u] & g.adj[v] & ~((1 << (v + 1)) - 1))
    return total


def count_k4(g: Graph) -> int:
    total = 0
    adj = g.adj
    for u, v in g.edges():
        common = adj[u] & adj[v] & ~((1 << (v + 1)) - 1)
        for w in bits(common):
            total += popcount(adj[w] & common & ~((1 << (w + 1)) - 1))
    return total


def new_triangles(g: Graph, u: int, v: int) -> int:
    """Triangles created by adding the edge uv."""
    return popcount(g.adj[u] & g.adj[v])


def new_k4(g: Graph, u: int, v: int) -> int:
    """4-cliques created by adding the edge uv."""
    common = g.adj[u] & g.adj[v]
    return sum(popcount(g.adj[w] & common & ~((1 << (w + 1)) - 1)) for w in bits(common))


def graph_stats(g: Graph) -> GraphStats:
    """
    Exact counts by bitset intersection.

    For each edge uv, n2 = common neighbours, n1 = vertices adjacent to
    exactly one endpoint, n0 = the rest; then T1 = sum n0, 2 T2 = sum n1
    and 3 T = sum n2.
    """
    adj = g.adj
    sum_n0 = sum_n1 = sum_n2 = 0
    edges = g.edges()
    for u, v in edges:
        n2 = popcount(adj[u] & adj[v])
        n1 = popcount((adj[u] ^ adj[v]) & ~(1 << u) & ~(1 << v))
        sum_n0 += g.n - 2 - n1 - n2
        sum_n1 += n1
        sum_n2 += n2
    degrees = g.degrees()
    return GraphStats(
        N=g.n,
        E=len(edges),
        T=sum_n2 // 3,
        K4=count_k4(g),
        degrees=degrees,
        sumDegSq=sum(d * d for d in degrees),
        T1=sum_n0,
        T2=sum_n1 // 2,
    )


def component_count(g: Graph) -> int:
    return len(component_masks(g))
