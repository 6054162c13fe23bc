"""
Canonical labeling for small graphs.

Colour refinement plus individualization search, run per connected
component (of the graph or of its complement when that is sparser).
Twin vertices are never individualized twice. The certificate of a leaf is
the tuple of relabeled adjacency rows; the canonical labeling is the one
with the largest certificate.
"""

import logging
from typing import List, Sequence, Tuple

from .graph import Graph, bits, complement, component_masks, induced_subgraph, popcount, relabel
from .graph6 import write_graph6
from ..utils.error_handler import GraphSizeError

logger = logging.getLogger('indatt.graphs.canonical')

MAX_CANONICAL_VERTICES = 16

Cells = List[List[int]]
Certificate = Tuple[int, ...]


def _refine(cells: Cells, adj: Sequence[int]) -> Cells:
    """Split cells by neighbour counts into every cell until the partition is equitable."""
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        refined: Cells = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                signature = tuple(popcount(adj[v] & m) for m in masks)
                groups.setdefault(signature, []).append(v)
            for signature in sorted(groups):
                refined.append(groups[signature])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _certificate(order: Sequence[int], adj: Sequence[int]) -> Certificate:
    position = {v: i for i, v in enumerate(order)}
    return tuple(sum(1 << position[w] for w in bits(adj[v])) for v in order)


def _are_twins(adj: Sequence[int], u: int, v: int) -> bool:
    return (adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u))


def _search(cells: Cells, adj: Sequence[int]) -> Tuple[Certificate, List[int]]:
    cells = _refine(cells, adj)
    targets = [i for i, cell in enumerate(cells) if len(cell) > 1]
    if not targets:
        order = [cell[0] for cell in cells]
        return _certificate(order, adj), order

    index = min(targets, key=lambda i: (len(cells[i]), i))
    cell = cells[index]
    best = None
    tried: List[int] = []
    for v in sorted(cell):
        if any(_are_twins(adj, u, v) for u in tried):
            continue
        tried.append(v)
        rest = [u for u in cell if u != v]
        result = _search(cells[:index] + [[v], rest] + cells[index + 1:], adj)
        if best is None or result[0] > best[0]:
            best = result
    return best


def _component_labeling(g: Graph, vertices: List[int]) -> Tuple[Certificate, List[int]]:
    sub = induced_subgraph(g, vertices)
    degrees = sub.degrees()
    # Initial cells by degree, ascending
    initial: Cells = []
    for d in sorted(set(degrees)):
        initial.append([v for v in range(sub.n) if degrees[v] == d])
    certificate, order = _search(initial, sub.adj)
    return certificate, [vertices[i] for i in order]


def _labeling(g: Graph) -> Tuple[bool, List[int]]:
    if g.n > MAX_CANONICAL_VERTICES:
        raise GraphSizeError(
            f"Canonical form is limited to {MAX_CANONICAL_VERTICES} vertices, got {g.n}",
            details={"n": g.n}
        )
    pairs = g.n * (g.n - 1) // 2
    use_complement = 2 * g.edge_count() > pairs
    base = complement(g) if use_complement else g

    labeled = []
    for mask in component_masks(base):
        vertices = list(bits(mask))
        certificate, order = _component_labeling(base, vertices)
        labeled.append((len(vertices), certificate, order))
    labeled.sort(key=lambda item: (item[0], item[1]))

    order: List[int] = []
    for _, _, component_order in labeled:
        order.extend(component_order)
    return use_complement, order


def canonical_labeling(g: Graph) -> List[int]:
    """
    Canonical vertex order: relabel(g, canonical_labeling(g)) is the same
    graph for every graph isomorphic to g.

    Raises:
        GraphSizeError: If g has more than 16 vertices
    """
    return _labeling(g)[1]


def canonical_pair(g: Graph) -> Tuple[bytes, Graph]:
    """Canonical form and canonical representative computed in one pass."""
    use_complement, order = _labeling(g)
    representative = relabel(g, order)
    base = complement(representative) if use_complement else representative
    form = bytes([1 if use_complement else 0]) + write_graph6(base).encode('ascii')
    return form, representative


def canonical_form(g: Graph) -> bytes:
    """
    Byte string equal for two graphs iff they are isomorphic.

    Raises:
        GraphSizeError: If g has more than 16 vertices
    """
    return canonical_pair(g)[0]


def canonical_representative(g: Graph) -> Graph:
    return canonical_pair(g)[1]


def is_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and a.edge_count() == b.edge_count() and canonical_form(a) == canonical_form(b)
