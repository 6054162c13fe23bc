"""
Graph core: representation, graph6 I/O, constructions, counting and canonical forms.
"""

from .graph import (
    MAX_VERTICES,
    Graph,
    add_edge,
    complement,
    complete_graph,
    component_masks,
    components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edges,
    induced_subgraph,
    is_connected,
    lexicographic_product,
    path_graph,
    random_graph,
    relabel,
    star_graph,
)
from .graph6 import parse_graph6, read_graph6_lines, write_graph6
from .counting import (
    GraphStats,
    count_k4,
    count_triangles,
    graph_stats,
    independence_number,
    independence_polynomial,
    independence_polynomial_bruteforce,
)
from .canonical import (
    canonical_form,
    canonical_labeling,
    canonical_pair,
    canonical_representative,
    is_isomorphic,
)
