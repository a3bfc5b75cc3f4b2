#stdlib
import typing as tp

#our stuff
from graphs.bipartite import BipartiteGraph
from theorems import formulas as f
from theorems.constructions import build_grs_extremal
from theorems.theorem import Theorem


class GRSEven(Theorem):
    ''' P_{2l+2}-free graphs, no connectivity asked '''

    NAME = 'grs_even'
    FAMILY = f.Family.PATH
    CONNECTIVITY = f.Connectivity.ANY
    LENGTH_SYMBOL = 'l'
    PRECONDITION = 'a ≤ b, ℓ ≥ 1'
    PARITY = f.Parity.EVEN

    @classmethod
    def bound(cls, a: int, b: int, n: int) -> int:
        return f.grs_even(a, b, n)

    @classmethod
    def branch(cls, a: int, b: int, n: int) -> str:
        return f.grs_even_branch(a, b, n)

    @classmethod
    def forbidden_length(cls, n: int) -> int:
        return 2 * n + 2

    @classmethod
    def length_from_params(cls, params: f.ExtremalParams) -> int:
        return (params.length - 2) // 2

    @classmethod
    def construct(cls, a: int, b: int, n: int) -> tp.List[BipartiteGraph]:
        return [build_grs_extremal(a, b, n, cls.PARITY)]


class GRSOdd(GRSEven):
    '''
    P_{2l+3}-free graphs, no connectivity asked.

    The two_cores branch is only claimed for l >= 2: at l = 1 a spanning double
    star has a+b-1 edges and no P_5.
    '''

    NAME = 'grs_odd'
    PARITY = f.Parity.ODD

    @classmethod
    def bound(cls, a: int, b: int, n: int) -> int:
        return f.grs_odd(a, b, n)

    @classmethod
    def branch(cls, a: int, b: int, n: int) -> str:
        return f.grs_odd_branch(a, b, n)

    @classmethod
    def in_range(cls, a: int, b: int, n: int) -> bool:
        if not super().in_range(a, b, n):
            return False
        return not (n == 1 and cls.branch(a, b, n) == f.TWO_CORES)

    @classmethod
    def forbidden_length(cls, n: int) -> int:
        return 2 * n + 3

    @classmethod
    def length_from_params(cls, params: f.ExtremalParams) -> int:
        return (params.length - 3) // 2
