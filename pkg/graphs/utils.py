#stdlib
import time
import logging
from functools import wraps
from typing import Any, Callable, Iterator, Optional

#our stuff
import constants as c


class TuranError(Exception):
    """Base class for every error raised by the library"""
    pass


class GraphError(TuranError):
    """Raised when a vertex or edge violates the bipartite indexing convention"""
    pass


class VertexCapError(GraphError):
    """Raised when a graph would exceed the supported vertex count"""
    pass


class Graph6FormatError(GraphError):
    """Raised for malformed graph6 input or a graph that is not bipartite under the declared split"""
    pass


class DisconnectedGraphError(TuranError):
    """Raised when an operation needs a connected graph"""
    pass


class NotTwoConnectedError(TuranError):
    """Raised when an operation needs a 2-connected graph"""
    pass


class PathNotMaximalError(TuranError):
    """Raised when a path passed as maximal can still be extended"""
    pass


class SearchBudgetExceeded(TuranError):
    """Raised when an exact search runs out of time before proving optimality"""
    pass


class ParameterRangeError(TuranError):
    """Raised when parameters fall outside a theorem's stated range"""
    pass


class StatementGap(TuranError):
    """Raised when a theorem makes no claim for the requested parameters"""
    pass


class OracleCapError(TuranError):
    """Raised when an exhaustive scan would exceed the configured edge-bit cap"""
    pass


EXIT_CODES = (
    (StatementGap, c.EXIT_GAP),
    (ParameterRangeError, c.EXIT_RANGE),
    (SearchBudgetExceeded, c.EXIT_BUDGET),
    (OracleCapError, c.EXIT_CAP),
    (TuranError, c.EXIT_USAGE),
    )


def exit_code_for(error: Exception) -> int:
    for cls, code in EXIT_CODES:
        if isinstance(error, cls):
            return code
    return c.EXIT_USAGE


def handle_turan_errors(
        func: Callable[..., int]
) -> Callable[..., int]:
    """
    Decorator for CLI commands: logs library errors and turns them into exit codes.

    Parameters:
        func (Callable[..., int]): a command returning its own exit code.

    Returns:
        Callable[..., int]: the wrapped command; never raises TuranError.
    """
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except TuranError as e:
            logging.getLogger('TuranLogger').error(f'{type(e).__name__}: {e}')
            return exit_code_for(e)
    return wrapper


def iter_bits(mask: int) -> Iterator[int]:
    ''' indices of set bits, ascending '''
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count('1')


class Budget:
    '''
    Wall-clock limit for one exact search call.

    The clock is read every c.BUDGET_CHECK_INTERVAL ticks so the inner search
    loop pays one integer decrement per node.
    '''

    def __init__(self, seconds: Optional[float] = None):
        self.seconds = c.DEFAULT_BUDGET if seconds is None else float(seconds)
        if self.seconds <= 0:
            raise ValueError(f'budget must be positive, got {self.seconds}')
        self.deadline = time.monotonic() + self.seconds
        self._countdown = c.BUDGET_CHECK_INTERVAL

    @classmethod
    def coerce(cls, budget: Any) -> 'Budget':
        ''' accept a Budget, a number of seconds or None (default budget) '''
        if isinstance(budget, Budget):
            return budget
        return cls(budget)

    def tick(self):
        self._countdown -= 1
        if self._countdown <= 0:
            self._countdown = c.BUDGET_CHECK_INTERVAL
            self.check()

    def check(self):
        if time.monotonic() > self.deadline:
            raise SearchBudgetExceeded(f'search exceeded its {self.seconds:g}s budget before proving optimality')

    def remaining(self) -> float:
        return max(0.0, self.deadline - time.monotonic())
