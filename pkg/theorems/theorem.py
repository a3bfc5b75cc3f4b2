#stdlib
import logging
import typing as tp
from dataclasses import dataclass

#our stuff
import constants as c
from graphs.bipartite import BipartiteGraph
from graphs.utils import ParameterRangeError, StatementGap
from theorems.formulas import Connectivity, ExtremalParams, Family

logger = logging.getLogger('TuranLogger')
logger.setLevel(logging.INFO)


@dataclass
class Theorem:
    ''' The base class for every closed-form extremal result. Children implement bound() and branch()
    and set the class-level attributes below; the rest is shared.
    '''

    #NOTE: all child classes must define these class-level attributes
    NAME: str
    FAMILY: Family
    CONNECTIVITY: Connectivity
    LENGTH_SYMBOL: str          #'l' or 'k', the CLI flag carrying the length parameter
    PRECONDITION: str           #human-readable range, listed by `bound --help`

    @classmethod
    def bound(cls, a: int, b: int, n: int) -> int:
        ''' NOTE: this method must be implemented by the child class '''
        raise NotImplementedError

    @classmethod
    def branch(cls, a: int, b: int, n: int) -> str:
        ''' NOTE: this method must be implemented by the child class '''
        raise NotImplementedError

    @classmethod
    def forbidden_length(cls, n: int) -> int:
        ''' ExtremalParams.length for the theorem's length argument n '''
        return n

    @classmethod
    def length_from_params(cls, params: ExtremalParams) -> int:
        ''' inverse of forbidden_length '''
        return params.length

    @classmethod
    def params(cls, a: int, b: int, n: int) -> ExtremalParams:
        return ExtremalParams(a, b, cls.forbidden_length(n), cls.FAMILY, cls.CONNECTIVITY)

    @classmethod
    def in_range(cls, a: int, b: int, n: int) -> bool:
        ''' does the theorem state a value here '''
        try:
            cls.bound(a, b, n)
        except (ParameterRangeError, StatementGap):
            return False
        return True

    @classmethod
    def evaluate(cls, a: int, b: int, n: int) -> dict:
        ''' the `bound` record; value is None where the statement has a gap '''
        try:
            value = cls.bound(a, b, n)
        except StatementGap:
            value = None
        return {
            c.PARAMS: {'a': a, 'b': b, cls.LENGTH_SYMBOL: n},
            c.VALUE: value,
            c.THEOREM: cls.NAME,
            c.BRANCH: cls.branch(a, b, n),
            }

    @classmethod
    def predicted_class_count(cls, a: int, b: int, n: int, allow_class_swap: bool = True) -> tp.Optional[int]:
        ''' number of extremal graphs up to isomorphism, when the theorem pins it down '''
        return None

    @classmethod
    def construct(cls, a: int, b: int, n: int) -> tp.List[BipartiteGraph]:
        ''' NOTE: child classes with explicit extremal graphs override this '''
        raise NotImplementedError(f'{cls.NAME} has no extremal construction')
