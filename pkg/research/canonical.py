#stdlib
import typing as tp
from itertools import permutations, product
from dataclasses import dataclass

#our stuff
from graphs.bipartite import BipartiteGraph, GraphBuilder
from graphs.utils import iter_bits

MASK_BYTES = 8


@dataclass(frozen=True, order=True)
class CanonicalForm:
    ''' byte string naming a bipartite graph up to class-preserving isomorphism (and A/B swap when a = b) '''

    code: bytes

    @property
    def a_size(self) -> int:
        return self.code[0]

    @property
    def b_size(self) -> int:
        return self.code[1]

    def hex(self) -> str:
        return self.code.hex()


def refine_colors(g: BipartiteGraph) -> tp.List[int]:
    '''
    Colour refinement started from (side, degree).

    Each round a vertex's colour becomes the rank of (colour, sorted neighbour colours)
    among all such signatures, so colours depend only on the isomorphism class.
    '''
    colors = [(0 if g.in_a(v) else 1, g.degree(v)) for v in g.vertices]
    ranks = sorted(set(colors))
    colors = [ranks.index(x) for x in colors]
    count = len(ranks)
    while True:
        signatures = [(colors[v], tuple(sorted(colors[w] for w in iter_bits(g.adjacency[v])))) for v in g.vertices]
        ranks = sorted(set(signatures))
        index = {s: i for i, s in enumerate(ranks)}
        colors = [index[s] for s in signatures]
        if len(ranks) == count:
            return colors
        count = len(ranks)


def _cell_orderings(cells: tp.List[tp.List[int]]) -> tp.Iterator[tp.Tuple[int, ...]]:
    for parts in product(*(permutations(cell) for cell in cells)):
        yield tuple(v for part in parts for v in part)


def _encode(g: BipartiteGraph) -> tp.Tuple[int, ...]:
    '''
    Least encoding over cell-respecting orderings of the smaller class S (A on ties).

    Under an ordering s_0, s_1, ... of S every vertex t of the other class becomes
    the mask of positions i with s_i ~ t; the sorted tuple of those masks fixes
    the graph up to reordering that other class.
    '''
    colors = refine_colors(g)
    small, other = (g.a_vertices, g.b_vertices) if g.a_size <= g.b_size else (g.b_vertices, g.a_vertices)
    by_color = {}
    for v in small:
        by_color.setdefault(colors[v], []).append(v)
    cells = [by_color[k] for k in sorted(by_color)]

    best = None
    for order in _cell_orderings(cells):
        position = {v: i for i, v in enumerate(order)}
        masks = []
        for t in other:
            mask = 0
            for s in iter_bits(g.adjacency[t]):
                mask |= 1 << position[s]
            masks.append(mask)
        masks.sort()
        masks = tuple(masks)
        if best is None or masks < best:
            best = masks
    return best


def _pack(a_size: int, b_size: int, masks: tp.Tuple[int, ...]) -> bytes:
    return bytes([a_size, b_size]) + b''.join(m.to_bytes(MASK_BYTES, 'big') for m in masks)


def canonical_form(g: BipartiteGraph, allow_class_swap: bool = True) -> CanonicalForm:
    code = _pack(g.a_size, g.b_size, _encode(g))
    if allow_class_swap and g.a_size == g.b_size:
        code = min(code, _pack(g.a_size, g.b_size, _encode(g.mirror())))
    return CanonicalForm(code)


def graph_from_form(form: CanonicalForm) -> BipartiteGraph:
    ''' the representative whose labels follow the canonical encoding '''
    a, b = form.a_size, form.b_size
    body = form.code[2:]
    masks = [int.from_bytes(body[i:i + MASK_BYTES], 'big') for i in range(0, len(body), MASK_BYTES)]
    builder = GraphBuilder(a, b)
    for j, mask in enumerate(masks):
        for i in iter_bits(mask):
            if a <= b:
                builder.add_edge(i, a + j)
            else:
                builder.add_edge(j, a + i)
    return builder.build()


def canonical_graph(g: BipartiteGraph, allow_class_swap: bool = True) -> BipartiteGraph:
    return graph_from_form(canonical_form(g, allow_class_swap))


def count_classes(graphs: tp.Iterable[BipartiteGraph], allow_class_swap: bool = True) -> int:
    return len({canonical_form(g, allow_class_swap) for g in graphs})
