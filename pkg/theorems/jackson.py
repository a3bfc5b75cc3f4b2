#our stuff
import constants as c
from graphs.utils import StatementGap
from theorems import formulas as f
from theorems.theorem import Theorem


class Jackson(Theorem):
    '''
    C_{>=2l}-free graphs, no connectivity asked.

    No value is stated at a = 2l-1. Below a = l-1 the complete graph is already
    free and the first branch overshoots ab, so comparisons start at a = l-1.
    '''

    NAME = 'jackson'
    FAMILY = f.Family.LONG_CYCLES
    CONNECTIVITY = f.Connectivity.ANY
    LENGTH_SYMBOL = 'l'
    PRECONDITION = 'a ≤ b, ℓ ≥ 2, a ≠ 2ℓ−1'

    @classmethod
    def bound(cls, a: int, b: int, n: int) -> int:
        value = f.jackson_cycle_bound(a, b, n)
        if value is None:
            raise StatementGap(f'{c.STATEMENT_GAP} at a={a}, b={b}, l={n}')
        return value

    @classmethod
    def branch(cls, a: int, b: int, n: int) -> str:
        return f.jackson_branch(a, b, n)

    @classmethod
    def in_range(cls, a: int, b: int, n: int) -> bool:
        return a >= n - 1 and super().in_range(a, b, n)
