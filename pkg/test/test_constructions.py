import sys
import os

parent_dir = os.path.abspath(os.path.join(os.path.dirname(__file__), os.pardir))
sys.path.append(parent_dir)

import unittest
from itertools import combinations

import networkx as nx

import constants as c
from graphs.bipartite import BipartiteGraph
from graphs.search import circumference, is_long_cycle_free, is_path_free, longest_path_vertices
from graphs.structure import is_connected, is_two_connected
from graphs.utils import ParameterRangeError
from theorems import formulas as f
from theorems.constructions import (B1_layouts, PendantLayout, add_universal_vertex, build_B1, build_B2,
                                    build_grs_extremal, enumerate_B1_family)
from test_formulas import thm1_grid, thm2_grid

FREENESS_MAX_VERTICES = 22 if c.SLOW_TESTS else 14


def same_graph(g: BipartiteGraph, h: BipartiteGraph) -> bool:
    ''' isomorphic with colour classes preserved '''
    match = lambda x, y: x['bipartite'] == y['bipartite']
    return (g.a_size, g.b_size) == (h.a_size, h.b_size) and nx.is_isomorphic(g.to_networkx(), h.to_networkx(), node_match=match)


class TestB2(unittest.TestCase):

    def test_values(self):
        self.assertEqual(build_B2(4, 5, 4).edge_count, 14)
        self.assertEqual(build_B2(5, 7, 5).edge_count, 25)

    def test_layout(self):
        g = build_B2(5, 6, 4)
        # core A-vertices 0, 1 see every B-vertex; 2, 3, 4 see the first two
        self.assertEqual([g.degree(u) for u in g.a_vertices], [6, 6, 2, 2, 2])
        self.assertEqual(g.neighbors(4), [5, 6])

    def test_range(self):
        with self.assertRaises(ParameterRangeError):
            build_B2(3, 4, 3)

    def test_edge_count_grid(self):
        for a, b, ell in thm1_grid():
            self.assertEqual(build_B2(a, b, ell).edge_count, f.thm1_bound(a, b, ell))

    def test_two_connected_and_free(self):
        for a, b, ell in thm1_grid():
            if a + b > FREENESS_MAX_VERTICES:
                continue
            g = build_B2(a, b, ell)
            self.assertTrue(is_two_connected(g))
            self.assertEqual(circumference(g)[0], 2 * ell - 2, (a, b, ell))


class TestB1(unittest.TestCase):

    def test_values(self):
        self.assertEqual(build_B1(4, 5, 9).edge_count, 16)
        self.assertEqual(build_B1(5, 6, 9).edge_count, 20)
        self.assertEqual(longest_path_vertices(build_B1(4, 5, 9))[0], 8)

    def test_spread_layout(self):
        g = build_B1(4, 4, 8, PendantLayout((1, 1, 0, 0)))
        self.assertEqual(g.edge_count, 10)
        self.assertTrue(is_connected(g))
        self.assertTrue(is_path_free(g, 8))

    def test_odd_k_needs_concentrated_layout(self):
        with self.assertRaises(ParameterRangeError):
            build_B1(5, 6, 9, PendantLayout((1, 1, 0, 0, 0, 0)))

    def test_layout_must_fit(self):
        with self.assertRaises(ParameterRangeError):
            build_B1(4, 4, 8, PendantLayout((2, 0, 0)))
        with self.assertRaises(ParameterRangeError):
            build_B1(4, 4, 8, PendantLayout((1, 0, 0, 0)))
        with self.assertRaises(ParameterRangeError):
            PendantLayout((-1, 3))

    def test_edge_count_grid(self):
        for a, b, k in thm2_grid():
            self.assertEqual(build_B1(a, b, k).edge_count, f.thm2_bound(a, b, k))
            if k % 2 == 0:
                for g in enumerate_B1_family(a, b, k):
                    self.assertEqual(g.edge_count, f.thm2_bound(a, b, k))

    def test_connected_and_free(self):
        for a, b, k in thm2_grid():
            if a + b > FREENESS_MAX_VERTICES:
                continue
            members = enumerate_B1_family(a, b, k) if k % 2 == 0 else [build_B1(a, b, k)]
            for g in members:
                self.assertTrue(is_connected(g))
                self.assertLessEqual(longest_path_vertices(g, stop_at=k)[0], k - 1, (a, b, k))


class TestB1Family(unittest.TestCase):

    def test_four_four_eight(self):
        family = enumerate_B1_family(4, 4, 8)
        self.assertEqual(len(family), 2)
        self.assertEqual([layout.counts for layout in B1_layouts(4, 4, 8)], [(2, 0, 0, 0), (1, 1, 0, 0)])
        for g in family:
            self.assertTrue(is_connected(g))
            self.assertTrue(is_path_free(g, 8))
        self.assertFalse(same_graph(*family))

    def test_counts_are_partition_counts(self):
        self.assertEqual(len(enumerate_B1_family(5, 6, 10)), 2)
        for b in range(4, 9):
            self.assertEqual(len(enumerate_B1_family(4, b, 8)), 2)
        # p = 4 has five partitions
        self.assertEqual(len(enumerate_B1_family(6, 6, 8)), 5)
        self.assertEqual(len(enumerate_B1_family(7, 7, 10)), 5)

    def test_members_pairwise_distinct(self):
        family = enumerate_B1_family(6, 7, 8)
        for g, h in combinations(family, 2):
            self.assertFalse(same_graph(g, h))

    def test_odd_k_rejected(self):
        with self.assertRaises(ParameterRangeError):
            enumerate_B1_family(4, 5, 9)

    def test_members_avoid_shorter_long_cycles(self):
        for ell in range(4, 7):
            for a in range(ell, ell + 3):
                for b in range(a, a + 3):
                    if a + b > FREENESS_MAX_VERTICES:
                        continue
                    for g in enumerate_B1_family(a, b, 2 * ell):
                        self.assertTrue(is_long_cycle_free(g, ell - 1))


class TestUniversalVertex(unittest.TestCase):

    def test_B1_plus_vertex_is_B2(self):
        for ell in range(4, 7):
            for a in range(ell + 1, ell + 4):
                for b in range(a, a + 3):
                    g = add_universal_vertex(build_B1(a, b, 2 * ell + 1))
                    self.assertTrue(same_graph(g, build_B2(a, b + 1, ell + 1)), (a, b, ell))
                    self.assertEqual(f.thm2_bound(a, b, 2 * ell + 1) + a, f.thm1_bound(a, b + 1, ell + 1))

    def test_adds_one_b_vertex(self):
        g = add_universal_vertex(build_B1(4, 4, 8))
        self.assertEqual((g.a_size, g.b_size), (4, 5))
        self.assertEqual(g.neighbors(8), [0, 1, 2, 3])


class TestGRSConstructions(unittest.TestCase):

    def test_examples(self):
        g = build_grs_extremal(3, 4, 2, 'even')
        self.assertEqual(g.edge_count, 8)
        self.assertTrue(is_path_free(g, 6))
        g = build_grs_extremal(6, 6, 2, f.Parity.ODD)
        self.assertEqual(g.edge_count, 18)
        self.assertTrue(same_graph(g, build_grs_extremal(6, 6, 2, 'odd')))
        self.assertTrue(is_path_free(g, 7))
        self.assertEqual(build_grs_extremal(2, 5, 2, 'even').edge_count, 10)

    def test_every_branch_attains_the_formula(self):
        for ell in range(1, 5):
            for a in range(1, 11):
                for b in range(a, 11):
                    even = build_grs_extremal(a, b, ell, 'even')
                    self.assertEqual(even.edge_count, f.grs_even(a, b, ell))
                    self.assertEqual((even.a_size, even.b_size), (a, b))
                    odd = build_grs_extremal(a, b, ell, 'odd')
                    self.assertEqual(odd.edge_count, f.grs_odd(a, b, ell))
                    self.assertEqual((odd.a_size, odd.b_size), (a, b))

    def test_every_branch_is_free(self):
        for ell in range(1, 4):
            for a in range(1, 8):
                for b in range(a, 8):
                    self.assertTrue(is_path_free(build_grs_extremal(a, b, ell, 'even'), 2 * ell + 2), (a, b, ell))
                    self.assertTrue(is_path_free(build_grs_extremal(a, b, ell, 'odd'), 2 * ell + 3), (a, b, ell))


if __name__ == '__main__':
    unittest.main()
