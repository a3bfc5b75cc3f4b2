import sys
import os

parent_dir = os.path.abspath(os.path.join(os.path.dirname(__file__), os.pardir))
sys.path.append(parent_dir)

import unittest

from hypothesis import given, settings

from graphs.bipartite import complete_bipartite, disjoint_union, empty, from_edges
from graphs.search import (CycleWitness, PathSearch, PathWitness, circumference, find_long_cycle, find_path,
                           is_long_cycle_free, is_path_free, longest_path_vertices, path_bound)
from graphs.utils import Budget, ParameterRangeError, SearchBudgetExceeded
from graph_factory import (NAIVE_MAX_VERTICES, bipartite_graphs, cycle_graph, naive_circumference,
                           naive_longest_path, path_graph, random_connected, random_sizes, rng)


class TestLongestPath(unittest.TestCase):

    def test_empty_graph(self):
        count, witness = longest_path_vertices(empty(0, 0))
        self.assertEqual(count, 0)
        self.assertEqual(witness.vertices, ())

    def test_edgeless(self):
        self.assertEqual(longest_path_vertices(empty(2, 3))[0], 1)

    def test_complete(self):
        self.assertEqual(longest_path_vertices(complete_bipartite(3, 3))[0], 6)
        self.assertEqual(longest_path_vertices(complete_bipartite(3, 5))[0], 7)
        self.assertEqual(longest_path_vertices(complete_bipartite(1, 4))[0], 3)

    def test_path_graph(self):
        for n in range(1, 12):
            g, order = path_graph(n)
            count, witness = longest_path_vertices(g)
            self.assertEqual(count, n)
            self.assertTrue(witness.verify(g))

    def test_disconnected_takes_largest(self):
        g = disjoint_union(path_graph(3)[0], complete_bipartite(2, 2))
        count, witness = longest_path_vertices(g)
        self.assertEqual(count, 4)
        self.assertTrue(witness.verify(g))

    def test_path_bound(self):
        self.assertEqual(path_bound(3, 3), 6)
        self.assertEqual(path_bound(3, 7), 7)
        self.assertEqual(path_bound(0, 4), 1)

    def test_matches_naive_on_connected_graphs(self):
        gen = rng(4)
        for _ in range(150):
            a, b = random_sizes(gen, 1, NAIVE_MAX_VERTICES)
            g = random_connected(gen, a, b, float(gen.uniform(0.0, 0.6)))
            count, witness = longest_path_vertices(g)
            self.assertEqual(count, naive_longest_path(g), g.edges())
            self.assertEqual(witness.m, count)
            self.assertTrue(witness.verify(g))
            self.assertLessEqual(count, 2 * min(a, b) + 1)

    @settings(max_examples=100, deadline=None)
    @given(bipartite_graphs(max_a=4, max_b=5))
    def test_matches_naive_on_any_graph(self, g):
        self.assertEqual(longest_path_vertices(g)[0], naive_longest_path(g))

    def test_stop_at(self):
        g = complete_bipartite(4, 4)
        count, witness = longest_path_vertices(g, stop_at=5)
        self.assertGreaterEqual(count, 5)
        self.assertTrue(witness.verify(g))


class TestCircumference(unittest.TestCase):

    def test_forest(self):
        self.assertEqual(circumference(path_graph(7)[0]), (0, None))

    def test_cycles(self):
        for length in (4, 6, 8, 10):
            g, order = cycle_graph(length)
            value, witness = circumference(g)
            self.assertEqual(value, length)
            self.assertTrue(witness.verify(g))

    def test_complete(self):
        self.assertEqual(circumference(complete_bipartite(3, 5))[0], 6)
        self.assertEqual(circumference(complete_bipartite(4, 4))[0], 8)

    def test_matches_naive_on_connected_graphs(self):
        gen = rng(5)
        for _ in range(150):
            a, b = random_sizes(gen, 1, NAIVE_MAX_VERTICES)
            g = random_connected(gen, a, b, float(gen.uniform(0.0, 0.6)))
            value, witness = circumference(g)
            self.assertEqual(value, naive_circumference(g), g.edges())
            self.assertEqual(value % 2, 0)
            if value:
                self.assertEqual(witness.length, value)
                self.assertTrue(witness.verify(g))

    @settings(max_examples=100, deadline=None)
    @given(bipartite_graphs(max_a=4, max_b=5))
    def test_matches_naive_on_any_graph(self, g):
        self.assertEqual(circumference(g)[0], naive_circumference(g))

    def test_cycle_witness_verify(self):
        g = complete_bipartite(2, 2)
        self.assertTrue(CycleWitness((0, 2, 1, 3)).verify(g))
        self.assertFalse(CycleWitness((0, 2, 1)).verify(g))
        self.assertFalse(CycleWitness((0, 2, 0, 3)).verify(g))


class TestFreeness(unittest.TestCase):

    def test_find_path(self):
        g = complete_bipartite(2, 3)
        witness = find_path(g, 5)
        self.assertEqual(witness.m, 5)
        self.assertTrue(witness.verify(g))
        self.assertIsNone(find_path(g, 6))
        self.assertTrue(is_path_free(g, 6))
        self.assertFalse(is_path_free(g, 1))

    def test_find_path_range(self):
        with self.assertRaises(ParameterRangeError):
            find_path(complete_bipartite(2, 2), 0)

    def test_find_long_cycle(self):
        g = complete_bipartite(3, 4)
        witness = find_long_cycle(g, 3)
        self.assertGreaterEqual(witness.length, 6)
        self.assertTrue(witness.verify(g))
        self.assertTrue(is_long_cycle_free(g, 4))
        self.assertFalse(is_long_cycle_free(g, 2))

    def test_find_long_cycle_range(self):
        with self.assertRaises(ParameterRangeError):
            find_long_cycle(complete_bipartite(2, 2), 1)

    def test_two_squares_have_no_six_cycle(self):
        g = from_edges(3, 4, [(0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (1, 6), (2, 5), (2, 6)])
        self.assertTrue(is_long_cycle_free(g, 3))
        self.assertEqual(longest_path_vertices(g)[0], 7)


class TestBudget(unittest.TestCase):

    def test_positive(self):
        with self.assertRaises(ValueError):
            Budget(0)

    def test_coerce(self):
        budget = Budget(5)
        self.assertIs(Budget.coerce(budget), budget)
        self.assertEqual(Budget.coerce(2.5).seconds, 2.5)

    def test_exhausted_budget_raises(self):
        budget = Budget(1)
        budget.deadline -= 10
        budget._countdown = 1
        with self.assertRaises(SearchBudgetExceeded):
            longest_path_vertices(complete_bipartite(5, 5), budget)

    def test_witness_positions(self):
        p = PathWitness((3, 0, 4, 1))
        self.assertEqual((p.m, p.u, p.v, p.at(2), p.position(4)), (4, 3, 1, 0, 3))
        self.assertEqual(p.to_dict(), {'vertices': [3, 0, 4, 1], 'm': 4})

    def test_engine_counts_nodes(self):
        engine = PathSearch(complete_bipartite(2, 2))
        engine.search(0)
        self.assertEqual(len(engine.best), 4)
        self.assertGreater(engine.nodes, 0)


if __name__ == '__main__':
    unittest.main()
