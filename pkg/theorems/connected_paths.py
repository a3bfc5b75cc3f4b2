#stdlib
import typing as tp

#our stuff
from graphs.bipartite import BipartiteGraph
from theorems import formulas as f
from theorems.constructions import build_B1, enumerate_B1_family
from theorems.theorem import Theorem


class ConnectedPaths(Theorem):
    '''
    Connected P_k-free graphs: ⌊(k-3)/2⌋b + a - ⌊(k-3)/2⌋ edges.

    Odd k has the single extremal graph B1(a,b,k); even k lets the pendant
    vertices sit on any B-vertices, giving the family 𝓑1(a,b,k).
    '''

    NAME = 'thm2'
    FAMILY = f.Family.PATH
    CONNECTIVITY = f.Connectivity.CONNECTED
    LENGTH_SYMBOL = 'k'
    PRECONDITION = 'b ≥ a ≥ ⌊k/2⌋, a+b ≥ k, k ≥ 8'

    @classmethod
    def bound(cls, a: int, b: int, n: int) -> int:
        return f.thm2_bound(a, b, n)

    @classmethod
    def branch(cls, a: int, b: int, n: int) -> str:
        return 'B1_family' if n % 2 == 0 else 'B1'

    @classmethod
    def predicted_class_count(cls, a: int, b: int, n: int, allow_class_swap: bool = True) -> tp.Optional[int]:
        if n % 2:
            return 1
        from research.canonical import count_classes
        return count_classes(enumerate_B1_family(a, b, n), allow_class_swap)

    @classmethod
    def construct(cls, a: int, b: int, n: int) -> tp.List[BipartiteGraph]:
        if n % 2:
            return [build_B1(a, b, n)]
        return enumerate_B1_family(a, b, n)
