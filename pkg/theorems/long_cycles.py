#stdlib
import typing as tp

#our stuff
from graphs.bipartite import BipartiteGraph
from theorems import formulas as f
from theorems.constructions import build_B2
from theorems.theorem import Theorem


class LongCycles(Theorem):
    ''' 2-connected C_{>=2l}-free graphs: (l-2)b + 2(a-l+2) edges, only B2(a,b,2l) attains it '''

    NAME = 'thm1'
    FAMILY = f.Family.LONG_CYCLES
    CONNECTIVITY = f.Connectivity.TWO_CONNECTED
    LENGTH_SYMBOL = 'l'
    PRECONDITION = 'b ≥ a ≥ ℓ ≥ 4'

    @classmethod
    def bound(cls, a: int, b: int, n: int) -> int:
        return f.thm1_bound(a, b, n)

    @classmethod
    def branch(cls, a: int, b: int, n: int) -> str:
        return 'B2'

    @classmethod
    def predicted_class_count(cls, a: int, b: int, n: int, allow_class_swap: bool = True) -> tp.Optional[int]:
        return 1

    @classmethod
    def construct(cls, a: int, b: int, n: int) -> tp.List[BipartiteGraph]:
        return [build_B2(a, b, n)]
