"""
Graph Module
Simple undirected graphs stored as bitset adjacency rows, plus constructions.
"""
import logging
import random
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from ..utils.error_handler import GraphInvariantError, GraphSizeError

logger = logging.getLogger('indatt.graphs.graph')

MAX_VERTICES = 64


def popcount(x: int) -> int:
    return bin(x).count('1')


def bits(x: int) -> Iterator[int]:
    """Indices of the set bits of x, lowest first."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class Graph:
    """
    Immutable simple graph on vertices 0..n-1.

    Row i of ``adj`` is the bitset of neighbors of vertex i. Construction
    checks symmetry, absence of loops and that no row has bits at or above n.
    """

    __slots__ = ('_n', '_adj')

    def __init__(self, n: int, adj: Sequence[int], allow_large: bool = False):
        """
        Initialize a graph.

        Args:
            n: Vertex count, 1..64 (any positive count with allow_large)
            adj: n bitset rows
            allow_large: Permit more than 64 vertices (slow product path)

        Raises:
            GraphSizeError: If n is out of range
            GraphInvariantError: If the rows do not describe a simple graph
        """
        if n < 1 or (n > MAX_VERTICES and not allow_large):
            raise GraphSizeError(f"Vertex count {n} outside 1..{MAX_VERTICES}", details={"n": n})
        adj = tuple(int(row) for row in adj)
        if len(adj) != n:
            raise GraphInvariantError(f"Expected {n} adjacency rows, got {len(adj)}")
        limit = (1 << n) - 1
        for i, row in enumerate(adj):
            if row & ~limit:
                raise GraphInvariantError(f"Row {i} has bits at or above n={n}", details={"row": i})
            if (row >> i) & 1:
                raise GraphInvariantError(f"Loop at vertex {i}", details={"vertex": i})
            for j in bits(row):
                if not (adj[j] >> i) & 1:
                    raise GraphInvariantError(f"Asymmetric adjacency between {i} and {j}",
                                              details={"pair": (i, j)})
        self._n = n
        self._adj = adj

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> Tuple[int, ...]:
        return self._adj

    @property
    def all_vertices(self) -> int:
        """Bitset of every vertex."""
        return (1 << self._n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self._adj[v])

    def degrees(self) -> List[int]:
        return [popcount(row) for row in self._adj]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (i, j) with i < j in lexicographic order."""
        return [(i, j) for i in range(self._n) for j in bits(self._adj[i] >> (i + 1) << (i + 1))]

    def non_edges(self) -> List[Tuple[int, int]]:
        """Non-adjacent pairs (i, j) with i < j in lexicographic order."""
        full = self.all_vertices
        return [(i, j) for i in range(self._n)
                for j in bits(~self._adj[i] & full & ~((1 << (i + 1)) - 1))]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edge_count()})"


def from_edges(n: int, edges: Iterable[Tuple[int, int]], allow_large: bool = False) -> Graph:
    """Build a graph from an edge list; repeated edges are ignored."""
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphInvariantError(f"Loop at vertex {u}", details={"vertex": u})
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInvariantError(f"Edge ({u}, {v}) outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows, allow_large=allow_large)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << i) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInvariantError(f"A cycle needs at least 3 vertices, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1}: vertex 0 joined to every other vertex."""
    return from_edges(n, [(0, i) for i in range(1, n)])


def random_graph(n: int, p: float, rng: Optional[random.Random] = None) -> Graph:
    """G(n, p) with a reproducible generator."""
    rng = rng or random.Random()
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def add_edge(g: Graph, u: int, v: int) -> Graph:
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, rows, allow_large=g.n > MAX_VERTICES)


def complement(g: Graph) -> Graph:
    full = g.all_vertices
    return Graph(g.n, [full & ~row & ~(1 << i) for i, row in enumerate(g.adj)],
                 allow_large=g.n > MAX_VERTICES)


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """
    Relabel so that new vertex i is old vertex order[i].

    Raises:
        GraphInvariantError: If order is not a permutation of 0..n-1
    """
    if sorted(order) != list(range(g.n)):
        raise GraphInvariantError("Relabeling order is not a permutation")
    position = [0] * g.n
    for new, old in enumerate(order):
        position[old] = new
    rows = []
    for old in order:
        row = 0
        for w in bits(g.adj[old]):
            row |= 1 << position[w]
        rows.append(row)
    return Graph(g.n, rows, allow_large=g.n > MAX_VERTICES)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on the given vertices, relabeled 0..k-1 in the given order."""
    position = {v: i for i, v in enumerate(vertices)}
    rows = []
    for v in vertices:
        rows.append(sum(1 << position[w] for w in bits(g.adj[v]) if w in position))
    return Graph(len(vertices), rows, allow_large=len(vertices) > MAX_VERTICES)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """
    a followed by b, with no edges between the blocks.

    Raises:
        GraphSizeError: If the union has more than 64 vertices
    """
    n = a.n + b.n
    if n > MAX_VERTICES:
        raise GraphSizeError(f"Disjoint union has {n} vertices, limit is {MAX_VERTICES}",
                             details={"n": n})
    return Graph(n, list(a.adj) + [row << a.n for row in b.adj])


def lexicographic_product(g: Graph, h: Graph) -> Graph:
    """
    g[h]: vertex (u, v) is u * h.n + v; (u, v) ~ (u', v') iff u ~ u' in g,
    or u = u' and v ~ v' in h.

    Products above 64 vertices use the same Python-int rows on the slow path.
    """
    m = h.n
    n = g.n * m
    if n > MAX_VERTICES:
        logger.debug(f"Lexicographic product on {n} vertices uses the large-graph path")
    block = (1 << m) - 1
    rows = []
    for u in range(g.n):
        outer = 0
        for w in bits(g.adj[u]):
            outer |= block << (w * m)
        for v in range(m):
            rows.append(outer | (h.adj[v] << (u * m)))
    return Graph(n, rows, allow_large=True)


def component_masks(g: Graph, mask: Optional[int] = None) -> List[int]:
    """Connected components of the subgraph induced by mask, as bitsets, ordered by lowest vertex."""
    remaining = g.all_vertices if mask is None else mask
    components = []
    while remaining:
        frontier = remaining & -remaining
        seen = frontier
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= g.adj[v]
            frontier = reach & remaining & ~seen
            seen |= frontier
        components.append(seen)
        remaining &= ~seen
    return components


def components(g: Graph) -> List[List[int]]:
    return [list(bits(mask)) for mask in component_masks(g)]


def is_connected(g: Graph) -> bool:
    """True iff a traversal from vertex 0 reaches every vertex."""
    return len(component_masks(g)) == 1
