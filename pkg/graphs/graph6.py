#stdlib
import typing as tp

#third party
import networkx as nx

#our stuff
import constants as c
from graphs.bipartite import BipartiteGraph, GraphBuilder
from graphs.utils import Graph6FormatError, VertexCapError

GRAPH6_MIN, GRAPH6_MAX = 63, 126     #printable graph6 data bytes


def to_graph6(g: BipartiteGraph) -> bytes:
    ''' header-less graph6 bytes, no trailing newline '''
    return nx.to_graph6_bytes(g.to_networkx(), header=False).strip()


def from_graph6(data: tp.Union[bytes, str], a_size: int) -> BipartiteGraph:
    '''
    Decode graph6 and split the vertices into A = 0..a_size-1 and B = the rest.

    Raises:
        Graph6FormatError: malformed bytes, a_size out of range or an edge inside a class.
    '''
    if isinstance(data, str):
        try:
            data = data.encode('ascii')
        except UnicodeEncodeError as e:
            raise Graph6FormatError(f'graph6 input is not ASCII: {data[:20]!r}') from e
    data = data.strip()
    if data.startswith(b'>>graph6<<'):
        data = data[len(b'>>graph6<<'):]
    if not data:
        raise Graph6FormatError('empty graph6 input')
    bad = [x for x in data if not GRAPH6_MIN <= x <= GRAPH6_MAX]
    if bad:
        raise Graph6FormatError(f'byte {bad[0]} is outside the graph6 range {GRAPH6_MIN}..{GRAPH6_MAX}')
    try:
        G = nx.from_graph6_bytes(data)
    except (ValueError, IndexError, TypeError, nx.NetworkXError) as e:
        raise Graph6FormatError(f'malformed graph6 {data[:20]!r}: {e}') from e

    n = G.number_of_nodes()
    if n > c.MAX_VERTICES:
        raise VertexCapError(f'graph6 input has {n} vertices, cap is {c.MAX_VERTICES}')
    if not 0 <= a_size <= n:
        raise Graph6FormatError(f'a_size={a_size} is not within 0..{n}')

    builder = GraphBuilder(a_size, n - a_size)
    for u, v in G.edges():
        if (u < a_size) == (v < a_size):
            side = 'A' if u < a_size else 'B'
            raise Graph6FormatError(f'edge ({u}, {v}) lies inside class {side} for a_size={a_size}')
        builder.add_edge(u, v)
    return builder.build()


def write_graph6_lines(graphs: tp.Iterable[BipartiteGraph]) -> str:
    return ''.join(to_graph6(g).decode('ascii') + '\n' for g in graphs)


def read_graph6_lines(text: str, a_size: int) -> tp.List[BipartiteGraph]:
    ''' one graph per non-blank line '''
    return [from_graph6(line, a_size) for line in text.splitlines() if line.strip()]
