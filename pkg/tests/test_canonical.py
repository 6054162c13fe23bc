"""
Tests for canonical labeling.
"""

import unittest
import os
import sys
import random

import networkx as nx

# Add parent directory to path to import modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.graphs.canonical import (
    canonical_form,
    canonical_labeling,
    canonical_pair,
    canonical_representative,
    is_isomorphic,
)
from src.graphs.graph import (
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    random_graph,
    relabel,
)
from src.utils.error_handler import GraphSizeError


def to_networkx(g):
    result = nx.Graph()
    result.add_nodes_from(range(g.n))
    result.add_edges_from(g.edges())
    return result


def shuffled(g, rng):
    order = list(range(g.n))
    rng.shuffle(order)
    return relabel(g, order)


class TestCanonicalForm(unittest.TestCase):
    """Tests for canonical forms and representatives."""

    def test_relabel_invariance(self):
        """Test that random relabelings share one canonical form."""
        rng = random.Random(21)
        for _ in range(40):
            g = random_graph(rng.randint(1, 12), rng.random(), rng)
            form, representative = canonical_pair(g)
            for _ in range(3):
                other = shuffled(g, rng)
                self.assertEqual(canonical_form(other), form)
                self.assertEqual(canonical_representative(other), representative)

    def test_regular_graphs(self):
        """Test graphs where refinement alone cannot split any cell."""
        rng = random.Random(22)
        for g in (cycle_graph(8), disjoint_union(cycle_graph(4), cycle_graph(4)),
                  complement(cycle_graph(9)), disjoint_union(complete_graph(4), complete_graph(4))):
            self.assertEqual(canonical_form(shuffled(g, rng)), canonical_form(g))
        self.assertNotEqual(canonical_form(cycle_graph(8)),
                            canonical_form(disjoint_union(cycle_graph(4), cycle_graph(4))))

    def test_matches_networkx(self):
        """Test isomorphism decisions against networkx on small graphs."""
        rng = random.Random(23)
        graphs = [random_graph(6, 0.5, rng) for _ in range(40)]
        for a in graphs[:20]:
            for b in graphs[20:]:
                expected = nx.is_isomorphic(to_networkx(a), to_networkx(b))
                self.assertEqual(is_isomorphic(a, b), expected)

    def test_labeling_is_permutation(self):
        """Test that the canonical labeling is a permutation of the vertices."""
        g = random_graph(10, 0.3, random.Random(24))
        self.assertEqual(sorted(canonical_labeling(g)), list(range(10)))

    def test_complement_flag(self):
        """Test that the leading byte records whether the complement was used."""
        self.assertEqual(canonical_form(empty_graph(5))[0], 0)
        self.assertEqual(canonical_form(complete_graph(5))[0], 1)

    def test_self_complementary_path(self):
        """Test that P4 and its complement are isomorphic."""
        self.assertTrue(is_isomorphic(path_graph(4), complement(path_graph(4))))

    def test_size_limit(self):
        """Test that more than 16 vertices are refused."""
        with self.assertRaises(GraphSizeError):
            canonical_form(empty_graph(17))


if __name__ == '__main__':
    unittest.main()
