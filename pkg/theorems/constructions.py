#stdlib
import logging
import typing as tp
from dataclasses import dataclass

#third party
from sympy.utilities.iterables import partitions

#our stuff
from graphs.bipartite import BipartiteGraph, GraphBuilder, complete_bipartite, disjoint_union, empty
from graphs.utils import ParameterRangeError
from theorems import formulas as f

logger = logging.getLogger('GraphLogger')


@dataclass(frozen=True)
class PendantLayout:
    '''
    How many pendant A-vertices hang off each B-vertex of a B1 graph.

    Attributes:
        counts (tuple[int]): one entry per B-vertex, in B-index order
    '''

    counts: tp.Tuple[int, ...]

    def __post_init__(self):
        if any(x < 0 for x in self.counts):
            raise ParameterRangeError(f'pendant counts must be non-negative, got {self.counts}')

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def is_concentrated(self) -> bool:
        return sum(1 for x in self.counts if x) <= 1

    @classmethod
    def concentrated(cls, p: int, b: int) -> 'PendantLayout':
        return cls((p,) + (0,) * (b - 1))

    @classmethod
    def from_parts(cls, parts: tp.Sequence[int], b: int) -> 'PendantLayout':
        ''' a partition padded with zeros to length b, largest parts first '''
        parts = sorted(parts, reverse=True)
        if len(parts) > b:
            raise ParameterRangeError(f'partition {parts} has more than b={b} parts')
        return cls(tuple(parts) + (0,) * (b - len(parts)))


def build_B2(a: int, b: int, ell: int) -> BipartiteGraph:
    '''
    K_{l-2,b} plus a-(l-2) A-vertices joined to the same two B-vertices.

    The core takes A-indices 0..l-3; the attachment vertices take the rest and
    all see the first two B-vertices.
    '''
    f.thm1_bound(a, b, ell)
    core = ell - 2
    builder = GraphBuilder(a, b)
    for u in range(core):
        for v in range(a, a + b):
            builder.add_edge(u, v)
    for u in range(core, a):
        builder.add_edge(u, a)
        builder.add_edge(u, a + 1)
    return builder.build()


def build_B1(a: int, b: int, k: int, layout: tp.Optional[PendantLayout] = None) -> BipartiteGraph:
    '''
    K_{q,b} with q = ⌊(k-3)/2⌋ plus a-q pendant A-vertices.

    Parameters:
        layout (PendantLayout): where the pendants attach; for odd k it must put
            every pendant on one B-vertex. Defaults to all on the first B-vertex.

    Raises:
        ParameterRangeError: parameters out of range or an odd-k layout that is spread out
    '''
    f.thm2_bound(a, b, k)
    q = (k - 3) // 2
    p = a - q
    layout = PendantLayout.concentrated(p, b) if layout is None else layout
    if len(layout.counts) != b or layout.total != p:
        raise ParameterRangeError(f'layout must have {b} entries summing to {p}, got {layout.counts}')
    if k % 2 and not layout.is_concentrated:
        raise ParameterRangeError(f'odd k={k} needs all pendants on one B-vertex, got {layout.counts}')

    builder = GraphBuilder(a, b)
    for u in range(q):
        for v in range(a, a + b):
            builder.add_edge(u, v)
    u = q
    for j, count in enumerate(layout.counts):
        for _ in range(count):
            builder.add_edge(u, a + j)
            u += 1
    return builder.build()


def B1_layouts(a: int, b: int, k: int) -> tp.List[PendantLayout]:
    ''' one layout per partition of p = a - ⌊(k-3)/2⌋ into at most b parts '''
    p = a - (k - 3) // 2
    parts = []
    for part in partitions(p, m=b):
        parts.append(tuple(sorted((size for size, mult in part.items() for _ in range(mult)), reverse=True)))
    parts.sort(reverse=True)
    return [PendantLayout.from_parts(x, b) for x in parts]


def enumerate_B1_family(a: int, b: int, k: int) -> tp.List[BipartiteGraph]:
    if k % 2:
        raise ParameterRangeError(f'the B1 family needs even k, got k={k}; odd k has the single graph build_B1')
    f.thm2_bound(a, b, k)
    family = [build_B1(a, b, k, layout) for layout in B1_layouts(a, b, k)]
    logger.debug(f'B1({a},{b},{k}) family has {len(family)} members')
    return family


def build_grs_extremal(a: int, b: int, ell: int, parity: tp.Union[str, f.Parity]) -> BipartiteGraph:
    '''
    A P_{2l+2}-free (even) or P_{2l+3}-free (odd) graph with the extremal edge count.

    Components live in one graph:
        complete      K_{a,b}
        star_core     K_{l,b} and a-l isolated A-vertices
        pendant_core  K_{l,b} and a-l pendant A-vertices on the first B-vertex
        two_cores     K_{l,b-l} ⊔ K_{a-l,l}
        double_block  2K_{l+1,l+1}
    '''
    parity = f.Parity(parity)
    if parity is f.Parity.EVEN:
        branch = f.grs_even_branch(a, b, ell)
    else:
        branch = f.grs_odd_branch(a, b, ell)

    if branch == f.COMPLETE:
        return complete_bipartite(a, b)
    if branch == f.STAR_CORE:
        return disjoint_union(complete_bipartite(ell, b), empty(a - ell, 0))
    if branch == f.PENDANT_CORE:
        builder = GraphBuilder.from_graph(disjoint_union(complete_bipartite(ell, b), empty(a - ell, 0)))
        for u in range(ell, a):
            builder.add_edge(u, a)
        return builder.build()
    if branch == f.DOUBLE_BLOCK:
        half = complete_bipartite(ell + 1, ell + 1)
        return disjoint_union(half, half)
    if branch == f.TWO_CORES:
        return disjoint_union(complete_bipartite(ell, b - ell), complete_bipartite(a - ell, ell))
    raise ParameterRangeError(f'no construction for ({a}, {b}, l={ell}, {parity.value})')


def add_universal_vertex(g: BipartiteGraph) -> BipartiteGraph:
    ''' one more B-vertex, adjacent to every A-vertex '''
    builder = GraphBuilder(g.a_size, g.b_size + 1)
    builder.add_edges(g.edges())
    for u in g.a_vertices:
        builder.add_edge(u, g.n)
    return builder.build()
