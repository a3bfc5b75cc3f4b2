#stdlib
import logging
import typing as tp
from functools import cached_property
from dataclasses import dataclass, field

#third party
import numpy as np
import networkx as nx

#our stuff
import constants as c
from graphs.utils import GraphError, VertexCapError, iter_bits, popcount

logger = logging.getLogger('GraphLogger')
logger.setLevel(logging.INFO)


def check_sizes(a_size: int, b_size: int):
    if a_size < 0 or b_size < 0:
        raise GraphError(f'class sizes must be non-negative, got a={a_size}, b={b_size}')
    if a_size + b_size > c.MAX_VERTICES:
        raise VertexCapError(f'{a_size}+{b_size} vertices exceeds the cap of {c.MAX_VERTICES}')


@dataclass(frozen=True)
class BipartiteGraph:
    '''
    Labeled bipartite graph G(A, B) with A = 0..a-1 and B = a..a+b-1.

    Attributes:
        a_size (int): |A|
        b_size (int): |B|
        adjacency (tuple[int]): one bitset row per vertex over all a+b indices

    Instances are immutable; use GraphBuilder to derive modified copies.
    '''

    a_size: int
    b_size: int
    adjacency: tp.Tuple[int, ...]

    def __post_init__(self):
        check_sizes(self.a_size, self.b_size)
        if len(self.adjacency) != self.a_size + self.b_size:
            raise GraphError(f'expected {self.a_size + self.b_size} adjacency rows, got {len(self.adjacency)}')

    #################### vertices ####################

    @property
    def n(self) -> int:
        return self.a_size + self.b_size

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def a_vertices(self) -> range:
        return range(self.a_size)

    @property
    def b_vertices(self) -> range:
        return range(self.a_size, self.n)

    @property
    def a_mask(self) -> int:
        return (1 << self.a_size) - 1

    @property
    def b_mask(self) -> int:
        return ((1 << self.n) - 1) ^ self.a_mask

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def in_a(self, v: int) -> bool:
        return v < self.a_size

    #################### edges ####################

    @cached_property
    def edge_count(self) -> int:
        return sum(popcount(self.adjacency[u]) for u in self.a_vertices)

    def degree(self, v: int) -> int:
        return popcount(self.adjacency[v])

    def degrees(self) -> np.ndarray:
        return np.array([popcount(row) for row in self.adjacency], dtype=np.int64)

    def min_degree(self) -> int:
        return int(self.degrees().min()) if self.n else 0

    def neighbors(self, v: int) -> tp.List[int]:
        return list(iter_bits(self.adjacency[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def edges(self) -> tp.List[tp.Tuple[int, int]]:
        ''' all edges as (A-vertex, B-vertex), sorted '''
        return [(u, v) for u in self.a_vertices for v in iter_bits(self.adjacency[u])]

    def edge_mask(self) -> int:
        ''' whole-graph encoding over K_{a,b}: edge (u, v) sets bit u*b + (v-a) '''
        mask = 0
        for u in self.a_vertices:
            row = self.adjacency[u] >> self.a_size
            mask |= row << (u * self.b_size)
        return mask

    #################### transforms ####################

    def relabel(self, mapping: tp.Sequence[int]) -> 'BipartiteGraph':
        ''' mapping[old] = new; must send A onto A and B onto B '''
        if sorted(mapping) != list(self.vertices):
            raise GraphError('relabeling must be a permutation of the vertex set')
        if any((old < self.a_size) != (new < self.a_size) for old, new in enumerate(mapping)):
            raise GraphError('relabeling must preserve the colour classes')
        builder = GraphBuilder(self.a_size, self.b_size)
        for u, v in self.edges():
            builder.add_edge(mapping[u], mapping[v])
        return builder.build()

    def mirror(self) -> 'BipartiteGraph':
        ''' swap the roles of A and B '''
        builder = GraphBuilder(self.b_size, self.a_size)
        for u, v in self.edges():
            builder.add_edge(v - self.a_size, u + self.b_size)
        return builder.build()

    #################### export ####################

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        for v in self.vertices:
            G.add_node(v, bipartite=0 if v < self.a_size else 1)
        G.add_edges_from(self.edges())
        return G

    def to_dot(self, name: str = 'G') -> str:
        ''' DOT text with the two colour classes on separate ranks '''
        lines = [f'graph {name} {{']
        lines.append('  { rank=same; ' + ' '.join(f'{v} [shape=circle];' for v in self.a_vertices) + ' }')
        lines.append('  { rank=same; ' + ' '.join(f'{v} [shape=box];' for v in self.b_vertices) + ' }')
        lines.extend(f'  {u} -- {v};' for u, v in self.edges())
        lines.append('}')
        return '\n'.join(lines) + '\n'

    def to_dict(self) -> dict:
        from graphs.graph6 import to_graph6
        return {
            c.A_SIZE: self.a_size,
            c.B_SIZE: self.b_size,
            c.GRAPH6: to_graph6(self).decode('ascii'),
            c.EDGES: [list(e) for e in self.edges()],
            }

    def __str__(self):
        return f'BipartiteGraph(a={self.a_size}, b={self.b_size}, m={self.edge_count})'


@dataclass
class GraphBuilder:
    ''' single-owner mutable edge set; build() freezes it into a BipartiteGraph '''

    a_size: int
    b_size: int
    rows: tp.List[int] = field(default_factory=list)

    def __post_init__(self):
        check_sizes(self.a_size, self.b_size)
        if not self.rows:
            self.rows = [0] * (self.a_size + self.b_size)

    @classmethod
    def from_graph(cls, g: BipartiteGraph) -> 'GraphBuilder':
        return cls(g.a_size, g.b_size, list(g.adjacency))

    def _check_edge(self, u: int, v: int):
        n = self.a_size + self.b_size
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f'edge ({u}, {v}) out of range for {n} vertices')
        if (u < self.a_size) == (v < self.a_size):
            raise GraphError(f'edge ({u}, {v}) joins two vertices of the same class')

    def add_edge(self, u: int, v: int) -> 'GraphBuilder':
        self._check_edge(u, v)
        self.rows[u] |= 1 << v
        self.rows[v] |= 1 << u
        return self

    def remove_edge(self, u: int, v: int) -> 'GraphBuilder':
        self._check_edge(u, v)
        self.rows[u] &= ~(1 << v)
        self.rows[v] &= ~(1 << u)
        return self

    def add_edges(self, edges: tp.Iterable[tp.Tuple[int, int]]) -> 'GraphBuilder':
        for u, v in edges:
            self.add_edge(u, v)
        return self

    def build(self) -> BipartiteGraph:
        return BipartiteGraph(self.a_size, self.b_size, tuple(self.rows))


def empty(a: int, b: int) -> BipartiteGraph:
    return GraphBuilder(a, b).build()


def complete_bipartite(a: int, b: int) -> BipartiteGraph:
    check_sizes(a, b)
    a_bits = (1 << a) - 1
    b_bits = ((1 << (a + b)) - 1) ^ a_bits
    return BipartiteGraph(a, b, tuple([b_bits] * a + [a_bits] * b))


def from_edges(a: int, b: int, edges: tp.Iterable[tp.Tuple[int, int]]) -> BipartiteGraph:
    return GraphBuilder(a, b).add_edges(edges).build()


def from_edge_mask(a: int, b: int, mask: int) -> BipartiteGraph:
    ''' inverse of BipartiteGraph.edge_mask '''
    check_sizes(a, b)
    if mask >> (a * b):
        raise GraphError(f'edge mask has bits beyond the {a * b} edges of K_{{{a},{b}}}')
    row_bits = (1 << b) - 1
    rows = [0] * (a + b)
    for u in range(a):
        row = (mask >> (u * b)) & row_bits
        rows[u] = row << a
        for j in iter_bits(row):
            rows[a + j] |= 1 << u
    return BipartiteGraph(a, b, tuple(rows))


def induced_with_labels(g: BipartiteGraph, keep: tp.Iterable[int]) -> tp.Tuple[BipartiteGraph, tp.List[int]]:
    '''
    G[keep], reindexed so kept A-vertices come first in their original order.

    Returns:
        the induced graph and the list old_label[new_index]
    '''
    keep = set(keep)
    if any(not 0 <= v < g.n for v in keep):
        raise GraphError(f'vertex set {sorted(keep)} is not a subset of V(G)')
    old = sorted(v for v in keep if v < g.a_size) + sorted(v for v in keep if v >= g.a_size)
    new_of = {v: i for i, v in enumerate(old)}
    a_new = sum(1 for v in old if v < g.a_size)
    builder = GraphBuilder(a_new, len(old) - a_new)
    for u, v in g.edges():
        if u in new_of and v in new_of:
            builder.add_edge(new_of[u], new_of[v])
    return builder.build(), old


def induced_subgraph(g: BipartiteGraph, keep: tp.Iterable[int]) -> BipartiteGraph:
    return induced_with_labels(g, keep)[0]


def disjoint_union(g: BipartiteGraph, h: BipartiteGraph) -> BipartiteGraph:
    ''' G ⊔ H, with G's classes placed before H's inside each colour class '''
    builder = GraphBuilder(g.a_size + h.a_size, g.b_size + h.b_size)
    a = builder.a_size
    for u, v in g.edges():
        builder.add_edge(u, v - g.a_size + a)
    for u, v in h.edges():
        builder.add_edge(u + g.a_size, v - h.a_size + a + g.b_size)
    return builder.build()
