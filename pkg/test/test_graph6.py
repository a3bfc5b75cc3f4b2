import sys
import os

parent_dir = os.path.abspath(os.path.join(os.path.dirname(__file__), os.pardir))
sys.path.append(parent_dir)

import unittest

import networkx as nx

from graphs.bipartite import complete_bipartite, empty
from graphs.graph6 import from_graph6, read_graph6_lines, to_graph6, write_graph6_lines
from graphs.utils import Graph6FormatError, VertexCapError
from graph_factory import GRAPH6_SAMPLES, random_bipartite, random_sizes, rng


class TestGraph6(unittest.TestCase):

    def test_k22(self):
        self.assertEqual(to_graph6(complete_bipartite(2, 2)), b'C]')
        g = from_graph6(b'C]', 2)
        self.assertEqual(g, complete_bipartite(2, 2))

    def test_header_and_str_input(self):
        self.assertEqual(from_graph6('>>graph6<<C]\n', 2), complete_bipartite(2, 2))

    def test_triangle_is_not_bipartite(self):
        with self.assertRaises(Graph6FormatError):
            from_graph6(b'Bw', 1)

    def test_split_inside_a_class(self):
        # K_{2,2} read with the wrong split puts an edge inside A
        with self.assertRaises(Graph6FormatError):
            from_graph6(b'C]', 3)

    def test_a_size_out_of_range(self):
        with self.assertRaises(Graph6FormatError):
            from_graph6(b'C]', 5)

    def test_malformed(self):
        for data in (b'', b'   ', b'C'):
            with self.assertRaises(Graph6FormatError):
                from_graph6(data, 0)

    def test_non_graph6_characters(self):
        # '?' would be a valid data byte, so nothing may be substituted
        for data in ('C\u00e9', b'C\xc3\xa9', b'C ]', b'C]\x7f'):
            with self.assertRaises(Graph6FormatError):
                from_graph6(data, 2)

    def test_vertex_cap(self):
        data = nx.to_graph6_bytes(nx.empty_graph(70), header=False).strip()
        with self.assertRaises(VertexCapError):
            from_graph6(data, 35)

    def test_empty_classes(self):
        g = from_graph6(to_graph6(empty(0, 3)), 0)
        self.assertEqual((g.a_size, g.b_size, g.edge_count), (0, 3, 0))

    def test_random_graphs_survive_encoding(self):
        gen = rng(6)
        for _ in range(GRAPH6_SAMPLES):
            a, b = random_sizes(gen, 1, 30)
            g = random_bipartite(gen, a, b, float(gen.uniform(0.05, 0.6)))
            self.assertEqual(from_graph6(to_graph6(g), a), g)

    def test_lines(self):
        graphs = [complete_bipartite(2, 2), empty(2, 2)]
        text = write_graph6_lines(graphs)
        self.assertEqual(text.count('\n'), 2)
        self.assertEqual(read_graph6_lines(text + '\n\n', 2), graphs)


if __name__ == '__main__':
    unittest.main()
