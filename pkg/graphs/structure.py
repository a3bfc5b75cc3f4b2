#stdlib
import typing as tp
from dataclasses import dataclass

#our stuff
from graphs.bipartite import BipartiteGraph
from graphs.utils import DisconnectedGraphError, iter_bits


def component_mask(g: BipartiteGraph, start: int, allowed: tp.Optional[int] = None) -> int:
    ''' bitset of vertices reachable from start inside the allowed vertex set '''
    allowed = g.all_mask if allowed is None else allowed
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adjacency[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def components(g: BipartiteGraph) -> tp.List[tp.List[int]]:
    ''' vertex lists of the connected components, ordered by smallest vertex '''
    out = []
    left = g.all_mask
    while left:
        start = (left & -left).bit_length() - 1
        comp = component_mask(g, start)
        out.append(list(iter_bits(comp)))
        left &= ~comp
    return out


def is_connected(g: BipartiteGraph) -> bool:
    ''' the empty graph and K_1 count as connected '''
    if g.n <= 1:
        return True
    return component_mask(g, 0) == g.all_mask


def _lowpoint_dfs(g: BipartiteGraph, root: int):
    '''
    Iterative lowpoint DFS over the component of root.

    Returns:
        (blocks, cut_vertices) where every block is a sorted vertex list.
    '''
    disc = {root: 0}
    low = {root: 0}
    blocks = []
    cuts = set()
    edge_stack = []
    root_children = 0
    # frames: [vertex, parent, remaining neighbour bits]
    stack = [[root, -1, g.adjacency[root]]]
    while stack:
        frame = stack[-1]
        v, parent, rest = frame
        if rest:
            w = (rest & -rest).bit_length() - 1
            frame[2] = rest & (rest - 1)
            if w == parent:
                continue
            if w not in disc:
                disc[w] = low[w] = len(disc)
                edge_stack.append((v, w))
                stack.append([w, v, g.adjacency[w]])
            elif disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
            continue

        stack.pop()
        if parent < 0:
            continue
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            if parent == root:
                root_children += 1
            else:
                cuts.add(parent)
            block = set()
            while True:
                e = edge_stack.pop()
                block.update(e)
                if e == (parent, v):
                    break
            blocks.append(sorted(block))
    if root_children > 1:
        cuts.add(root)
    return blocks, cuts


def articulation_points(g: BipartiteGraph) -> tp.List[int]:
    cuts = set()
    for comp in components(g):
        cuts |= _lowpoint_dfs(g, comp[0])[1]
    return sorted(cuts)


def is_two_connected(g: BipartiteGraph) -> bool:
    return g.n >= 3 and is_connected(g) and not articulation_points(g)


@dataclass(frozen=True)
class BlockDecomposition:
    ''' blocks (maximal 2-connected subgraphs or bridges) of a connected graph '''

    blocks: tp.Tuple[tp.Tuple[int, ...], ...]
    cut_vertices: tp.Tuple[int, ...]

    @property
    def block_cut_tree(self) -> tp.List[tp.Tuple[int, int]]:
        ''' incidences (block index, cut vertex) '''
        return [(i, v) for i, block in enumerate(self.blocks) for v in block if v in self.cut_vertices]

    def block_edges(self, g: BipartiteGraph, i: int) -> tp.List[tp.Tuple[int, int]]:
        members = set(self.blocks[i])
        return [(u, v) for u, v in g.edges() if u in members and v in members]

    def to_dict(self) -> dict:
        return {
            'blocks': [list(b) for b in self.blocks],
            'cut_vertices': list(self.cut_vertices),
            }


def block_decomposition(g: BipartiteGraph) -> BlockDecomposition:
    '''
    Split a connected graph into blocks with one lowpoint DFS.

    Raises:
        DisconnectedGraphError: g has more than one component.
    '''
    if not is_connected(g):
        raise DisconnectedGraphError(f'{g} is not connected')
    if g.n == 0:
        return BlockDecomposition((), ())
    if g.n == 1:
        return BlockDecomposition(((0,),), ())
    blocks, cuts = _lowpoint_dfs(g, 0)
    blocks.sort()
    return BlockDecomposition(tuple(tuple(b) for b in blocks), tuple(sorted(cuts)))


def two_connected_blocks(g: BipartiteGraph) -> tp.List[tp.List[int]]:
    ''' vertex lists of the non-bridge blocks of every component, largest first '''
    out = []
    for comp in components(g):
        if len(comp) < 4:
            continue
        out.extend(b for b in _lowpoint_dfs(g, comp[0])[0] if len(b) >= 4)
    out.sort(key=lambda b: (-len(b), b))
    return out
