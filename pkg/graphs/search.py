#stdlib
import logging
import typing as tp
from dataclasses import dataclass

#our stuff
from graphs.bipartite import BipartiteGraph
from graphs.structure import components, is_two_connected, two_connected_blocks
from graphs.utils import (Budget, GraphError, NotTwoConnectedError, ParameterRangeError,
                          PathNotMaximalError, iter_bits, popcount)

logger = logging.getLogger('SearchLogger')
logger.setLevel(logging.INFO)

DISJOINT = 'disjoint'
TOUCHING = 'touching'
CROSSING = 'crossing'


@dataclass(frozen=True)
class PathWitness:
    '''
    A path v_1 ... v_m given by its vertex sequence.

    Positions are 1-based, so position(v_1) == 1 and position(v_m) == m.
    The shifted neighbourhoods are taken along the path:
        predecessor_set      N^-(v_1)  = {v_{t-1} : v_t in N(v_1)}
        successor_set        N^+(v_m)  = {v_{t+1} : v_t in N(v_m)}
        second_successor_set N^++(v_m) = {v_{t+2} : v_t in N(v_m)}
    '''

    vertices: tp.Tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.vertices)

    @property
    def u(self) -> int:
        return self.vertices[0]

    @property
    def v(self) -> int:
        return self.vertices[-1]

    @property
    def vertex_mask(self) -> int:
        mask = 0
        for x in self.vertices:
            mask |= 1 << x
        return mask

    def at(self, t: int) -> int:
        ''' v_t '''
        return self.vertices[t - 1]

    def position(self, x: int) -> int:
        return self.vertices.index(x) + 1

    def neighbor_positions(self, g: BipartiteGraph, x: int) -> tp.List[int]:
        ''' sorted positions of N(x) on the path '''
        return [t for t, y in enumerate(self.vertices, 1) if g.has_edge(x, y)]

    def _shifted(self, g: BipartiteGraph, x: int, shift: int) -> tp.FrozenSet[int]:
        return frozenset(self.at(t + shift) for t in self.neighbor_positions(g, x) if 1 <= t + shift <= self.m)

    def predecessor_set(self, g: BipartiteGraph) -> tp.FrozenSet[int]:
        return self._shifted(g, self.u, -1)

    def successor_set(self, g: BipartiteGraph) -> tp.FrozenSet[int]:
        return self._shifted(g, self.v, 1)

    def second_successor_set(self, g: BipartiteGraph) -> tp.FrozenSet[int]:
        return self._shifted(g, self.v, 2)

    def verify(self, g: BipartiteGraph) -> bool:
        ''' distinct, in range, consecutive vertices adjacent (hence alternating) '''
        if any(not 0 <= x < g.n for x in self.vertices):
            return False
        if len(set(self.vertices)) != self.m:
            return False
        return all(g.has_edge(x, y) for x, y in zip(self.vertices, self.vertices[1:]))

    def to_dict(self) -> dict:
        return {'vertices': list(self.vertices), 'm': self.m}


@dataclass(frozen=True)
class CycleWitness:
    ''' a cycle as its cyclic vertex sequence '''

    vertices: tp.Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def verify(self, g: BipartiteGraph) -> bool:
        k = self.length
        if k < 4 or k % 2 or len(set(self.vertices)) != k:
            return False
        if any(not 0 <= x < g.n for x in self.vertices):
            return False
        return all(g.has_edge(self.vertices[t], self.vertices[(t + 1) % k]) for t in range(k))

    def to_dict(self) -> dict:
        return {'vertices': list(self.vertices), 'length': self.length}


@dataclass(frozen=True)
class JacksonConfig:
    '''
    Odd maximal path whose endpoint neighbourhoods are two index intervals each:
        N(v_1) = {v_2..v_j} ∪ {v_i'..v_i}
        N(v_m) = {v_j..v_j'} ∪ {v_i..v_{m-1}}
    (intersected with the endpoints' opposite colour class, i.e. even positions)
    '''

    i: int
    j: int
    i_prime: int
    j_prime: int
    m: int

    def to_dict(self) -> dict:
        return {'i': self.i, 'j': self.j, 'i_prime': self.i_prime, 'j_prime': self.j_prime, 'm': self.m}


class PathSearch:
    '''
    Exact depth-first search for long paths with two prunings:
        reachability: the path can only grow by vertices reachable from its head
        alternation: growth from a head in class X is at most 2*rX+1 if rY > rX else 2*rY,
            where rX, rY count the usable vertices per class (see growth_bound)
    and, for paths with a fixed end, the vertex-count parity the two endpoint classes force.

    Attributes:
        rows (list[int]): working adjacency, may have edges removed by the caller
        stop_at (int): stop as soon as a path with this many vertices is recorded
        best (list[int]): incumbent path
    '''

    def __init__(self, g: BipartiteGraph, budget: tp.Any = None, stop_at: tp.Optional[int] = None):
        self.g = g
        self.rows = list(g.adjacency)
        self.a_mask = g.a_mask
        self.budget = Budget.coerce(budget)
        self.stop_at = stop_at
        self.best = []
        self.nodes = 0
        self.done = False
        self.parity = 0

    def reach(self, head: int, free: int) -> int:
        ''' vertices of free reachable from head through free '''
        seen = 0
        frontier = self.rows[head] & free
        while frontier:
            seen |= frontier
            nxt = 0
            for x in iter_bits(frontier):
                nxt |= self.rows[x]
            frontier = nxt & free & ~seen
        return seen

    def growth_bound(self, head: int, free: int, reachable: int) -> int:
        '''
        Most vertices the path can still gain from head.

        Past the first step a new endpoint needs a free neighbour, an internal
        vertex two neighbours in free ∪ {head}, and twins sharing the neighbourhood N
        supply at most |N|-1 internal vertices.
        '''
        if not reachable:
            return 0
        head_in_a = self.a_mask >> head & 1
        free_plus = free | 1 << head
        ends = [0, 0]           #[same class as head, other class]
        twins = {}
        for x in iter_bits(reachable):
            nbrs = self.rows[x] & free_plus
            other = int((self.a_mask >> x & 1) != head_in_a)
            if nbrs & free:
                ends[other] += 1
                size = popcount(nbrs)
                if size >= 2:
                    twins[other, nbrs] = twins.get((other, nbrs), 0) + 1
        inner = [0, 0]
        for (other, nbrs), count in twins.items():
            inner[other] += min(count, popcount(nbrs) - 1)

        e_x, e_y = ends
        t = 2 * e_x + 1 if e_y > e_x else 2 * e_y
        while t > 1:
            n_y, n_x = (t + 1) // 2, t // 2
            last_y, last_x = t % 2, 1 - t % 2
            if n_y - last_y <= inner[1] and n_x - last_x <= inner[0]:
                return t
            t -= 1
        return 1

    def _record(self, path: tp.List[int]):
        if len(path) > len(self.best):
            self.best = list(path)
            if self.stop_at is not None and len(self.best) >= self.stop_at:
                self.done = True

    def _dfs(self, path: tp.List[int], visited: int, allowed: int, end: tp.Optional[int]):
        self.nodes += 1
        self.budget.tick()
        head = path[-1]
        if end is None or head == end:
            self._record(path)
            if self.done or end is not None:
                return
        free = allowed & ~visited
        reachable = self.reach(head, free)
        if end is not None and not reachable >> end & 1:
            return
        limit = len(path) + self.growth_bound(head, free, reachable)
        if end is not None and limit % 2 != self.parity:
            limit -= 1
        if limit <= len(self.best):
            return
        for w in iter_bits(self.rows[head] & free):
            path.append(w)
            self._dfs(path, visited | 1 << w, allowed, end)
            path.pop()
            if self.done:
                return

    def search(self, start: int, allowed: tp.Optional[int] = None, end: tp.Optional[int] = None):
        ''' improve the incumbent with paths from start (ending at end if given) inside allowed '''
        allowed = self.g.all_mask if allowed is None else allowed
        if self.done:
            return
        if end is not None:
            # an end in the other class forces an even vertex count
            self.parity = int((self.a_mask >> start & 1) == (self.a_mask >> end & 1))
        self._dfs([start], 1 << start, allowed, end)


def path_bound(a_count: int, b_count: int) -> int:
    ''' most vertices an alternating path can use '''
    return 2 * min(a_count, b_count) + (1 if a_count != b_count else 0)


def longest_path_vertices(g: BipartiteGraph, budget: tp.Any = None,
                          stop_at: tp.Optional[int] = None) -> tp.Tuple[int, PathWitness]:
    '''
    Exact number of vertices on a longest path, with a witness.

    Parameters:
        g (BipartiteGraph): the host graph
        budget: Budget, seconds, or None for the default budget
        stop_at (int): optional target; the search stops once a path this long is found

    Returns:
        (count, PathWitness); count is 0 with an empty witness for the empty graph

    Raises:
        SearchBudgetExceeded: the budget ran out before optimality was proved
    '''
    engine = PathSearch(g, budget, stop_at)
    comps = sorted(components(g), key=lambda comp: -len(comp))
    for comp in comps:
        comp_mask = sum(1 << v for v in comp)
        a_count = popcount(comp_mask & g.a_mask)
        bound = path_bound(a_count, len(comp) - a_count)
        for s in comp:
            if engine.done or len(engine.best) >= bound:
                break
            engine.search(s, comp_mask)
        if engine.done:
            break
    logger.debug(f'longest path in {g}: {len(engine.best)} vertices after {engine.nodes} nodes')
    return len(engine.best), PathWitness(tuple(engine.best))


def circumference(g: BipartiteGraph, budget: tp.Any = None,
                  stop_at: tp.Optional[int] = None) -> tp.Tuple[int, tp.Optional[CycleWitness]]:
    '''
    Length of a longest cycle, 0 for forests.

    Works block by block; inside a block the i-th edge (u, v) closes the longest
    u-v path avoiding edges 1..i, so every cycle is seen through its first edge.
    '''
    engine = PathSearch(g, budget, stop_at)
    target = stop_at
    best = []
    for block in two_connected_blocks(g):
        block_mask = sum(1 << v for v in block)
        a_count = popcount(block_mask & g.a_mask)
        bound = 2 * min(a_count, len(block) - a_count)
        if len(best) >= bound:
            continue
        for u, v in [(u, v) for u, v in g.edges() if block_mask >> u & 1 and block_mask >> v & 1]:
            engine.rows[u] &= ~(1 << v)
            engine.rows[v] &= ~(1 << u)
            engine.best = best
            engine.search(u, block_mask, end=v)
            best = engine.best
            if len(best) >= bound or (target is not None and len(best) >= target):
                break
        engine.rows = list(g.adjacency)
        if target is not None and len(best) >= target:
            break
    logger.debug(f'circumference of {g}: {len(best)} after {engine.nodes} nodes')
    if not best:
        return 0, None
    return len(best), CycleWitness(tuple(best))


def find_path(g: BipartiteGraph, k: int, budget: tp.Any = None) -> tp.Optional[PathWitness]:
    ''' a path on exactly k vertices, or None if g is P_k-free '''
    if k < 1:
        raise ParameterRangeError(f'P_k needs k >= 1, got k={k}')
    if k > path_bound(g.a_size, g.b_size):
        return None
    count, witness = longest_path_vertices(g, budget, stop_at=k)
    if count < k:
        return None
    return PathWitness(witness.vertices[:k])


def is_path_free(g: BipartiteGraph, k: int, budget: tp.Any = None) -> bool:
    return find_path(g, k, budget) is None


def find_long_cycle(g: BipartiteGraph, ell: int, budget: tp.Any = None) -> tp.Optional[CycleWitness]:
    ''' a cycle of length at least 2*ell, or None if g is C_{>=2ell}-free '''
    if ell < 2:
        raise ParameterRangeError(f'C_{{>=2l}} needs l >= 2, got l={ell}')
    if 2 * ell > 2 * min(g.a_size, g.b_size):
        return None
    length, witness = circumference(g, budget, stop_at=2 * ell)
    return witness if length >= 2 * ell else None


def is_long_cycle_free(g: BipartiteGraph, ell: int, budget: tp.Any = None) -> bool:
    return find_long_cycle(g, ell, budget) is None


#################### maximal paths ####################

def is_maximal(g: BipartiteGraph, p: PathWitness) -> bool:
    ''' neither endpoint has a neighbour off the path '''
    if p.m == 0:
        return False
    on_path = p.vertex_mask
    return not (g.adjacency[p.u] & ~on_path) and not (g.adjacency[p.v] & ~on_path)


def _require_path(g: BipartiteGraph, p: PathWitness):
    if p.m == 0 or not p.verify(g):
        raise GraphError(f'{list(p.vertices)} is not a path in {g}')


def _require_maximal(g: BipartiteGraph, p: PathWitness):
    _require_path(g, p)
    if not is_maximal(g, p):
        raise PathNotMaximalError(f'path {list(p.vertices)} can still be extended')


def extend_to_maximal_path(g: BipartiteGraph, seed: PathWitness) -> PathWitness:
    ''' greedy extension, tail first, always to the smallest-index free neighbour '''
    _require_path(g, seed)
    path = list(seed.vertices)
    on_path = seed.vertex_mask
    while True:
        free = g.adjacency[path[-1]] & ~on_path
        if free:
            w = (free & -free).bit_length() - 1
            path.append(w)
            on_path |= 1 << w
            continue
        free = g.adjacency[path[0]] & ~on_path
        if free:
            w = (free & -free).bit_length() - 1
            path.insert(0, w)
            on_path |= 1 << w
            continue
        return PathWitness(tuple(path))


def jackson_formula(m: int, d_u: int, d_v: int) -> int:
    ''' min{m - par(m), 2(d(u) + d(v) - 1 - par(m))}, par(m) = 1 for odd m '''
    par = m % 2
    return min(m - par, 2 * (d_u + d_v - 1 - par))


def jackson_bound(g: BipartiteGraph, p: PathWitness) -> int:
    '''
    Guaranteed cycle length from a maximal path of a 2-connected bipartite graph.

    Raises:
        NotTwoConnectedError, PathNotMaximalError
    '''
    if not is_two_connected(g):
        raise NotTwoConnectedError(f'{g} is not 2-connected')
    _require_maximal(g, p)
    return jackson_formula(p.m, g.degree(p.u), g.degree(p.v))


def endpoint_case(g: BipartiteGraph, p: PathWitness) -> str:
    '''
    Compare i = max position of N(v_1) with j = min position of N(v_m).

    Returns:
        DISJOINT (i < j), TOUCHING (i == j, only possible for odd m) or CROSSING (i > j)
    '''
    _require_maximal(g, p)
    if p.m < 2:
        raise GraphError('endpoint cases need a path with at least one edge')
    i = max(p.neighbor_positions(g, p.u))
    j = min(p.neighbor_positions(g, p.v))
    if i < j:
        return DISJOINT
    return TOUCHING if i == j else CROSSING


def _evens(lo: int, hi: int) -> tp.Set[int]:
    return {t for t in range(lo, hi + 1) if t % 2 == 0}


def detect_jackson_config(g: BipartiteGraph, p: PathWitness) -> tp.Optional[JacksonConfig]:
    '''
    The two-interval endpoint configuration of an odd maximal path, if present.

    With j = min position of N(v_m) and i = max position of N(v_1), tries every
    even j' in [j, i) and i' in (j', i] and returns the lexicographically
    smallest (j', i') whose interval sets equal both endpoint neighbourhoods.
    '''
    _require_maximal(g, p)
    m = p.m
    if m % 2 == 0:
        return None
    first = set(p.neighbor_positions(g, p.u))
    last = set(p.neighbor_positions(g, p.v))
    if not first or not last:
        return None
    i, j = max(first), min(last)
    if not 2 < j < i < m:
        return None
    for j_prime in range(j, i):
        if j_prime % 2:
            continue
        for i_prime in range(j_prime + 1, i + 1):
            if i_prime % 2:
                continue
            if first == _evens(2, j) | _evens(i_prime, i) and last == _evens(j, j_prime) | _evens(i, m - 1):
                return JacksonConfig(i=i, j=j, i_prime=i_prime, j_prime=j_prime, m=m)
    return None
