#stdlib
import re
import typing as tp
from enum import Enum
from dataclasses import dataclass

#our stuff
import constants as c
from graphs.bipartite import BipartiteGraph
from graphs.search import is_long_cycle_free, is_path_free
from graphs.structure import is_connected, is_two_connected
from graphs.utils import ParameterRangeError


class Family(Enum):
    PATH = 'path'
    LONG_CYCLES = 'long_cycles'


class Connectivity(Enum):
    ANY = 'any'
    CONNECTED = 'connected'
    TWO_CONNECTED = 'two_connected'


class Parity(Enum):
    EVEN = 'even'
    ODD = 'odd'


#################### branch labels ####################

COMPLETE = 'complete'               #K_{a,b} itself is free
STAR_CORE = 'star_core'             #K_{l,b} plus isolated A-vertices
PENDANT_CORE = 'pendant_core'       #K_{l,b} plus pendant A-vertices
TWO_CORES = 'two_cores'             #K_{l,b-l} ⊔ K_{a-l,l}
DOUBLE_BLOCK = 'double_block'       #2K_{l+1,l+1}
SMALL_A = 'small_a'                 #jackson, a <= 2l-2
LARGE_A = 'large_a'                 #jackson, a >= 2l
GAP = 'gap'                         #jackson, a = 2l-1

TOKEN_RE = re.compile(rf'^(?:({c.PATH_TOKEN})|({c.LONG_CYCLE_TOKEN}))(\d+)$')


def _require(ok: bool, precondition: str, **values):
    if not ok:
        got = ', '.join(f'{k}={v}' for k, v in values.items())
        raise ParameterRangeError(f'requires {precondition}; got {got}')


@dataclass(frozen=True)
class ExtremalParams:
    '''
    One extremal problem: classes of sizes a <= b, a forbidden family and a connectivity class.

    Attributes:
        a, b (int): colour class sizes
        length (int): k for the path P_k, l for the cycle family C_{>=2l}
        family (Family)
        connectivity (Connectivity)
    '''

    a: int
    b: int
    length: int
    family: Family
    connectivity: Connectivity = Connectivity.ANY

    def __post_init__(self):
        _require(self.b >= self.a >= 1, 'b ≥ a ≥ 1', a=self.a, b=self.b)
        if self.family is Family.PATH:
            _require(self.length >= 1, 'k ≥ 1 for P_k', k=self.length)
        else:
            _require(self.length >= 2, 'ℓ ≥ 2 for C_{≥2ℓ}', l=self.length)

    @classmethod
    def parse(cls, a: int, b: int, token: str, connectivity: tp.Union[str, Connectivity] = Connectivity.ANY) -> 'ExtremalParams':
        ''' token is P<k> or Cge<2l> '''
        match = TOKEN_RE.match(token.strip())
        if match is None:
            raise ParameterRangeError(f'forbidden family must look like {c.PATH_TOKEN}<k> or {c.LONG_CYCLE_TOKEN}<2l>, got {token!r}')
        number = int(match.group(3))
        if match.group(1):
            return cls(a, b, number, Family.PATH, Connectivity(connectivity))
        _require(number % 2 == 0 and number >= 4, 'an even cycle length 2ℓ ≥ 4', length=number)
        return cls(a, b, number // 2, Family.LONG_CYCLES, Connectivity(connectivity))

    @property
    def token(self) -> str:
        if self.family is Family.PATH:
            return f'{c.PATH_TOKEN}{self.length}'
        return f'{c.LONG_CYCLE_TOKEN}{2 * self.length}'

    def is_free(self, g: BipartiteGraph, budget: tp.Any = None) -> bool:
        if self.family is Family.PATH:
            return is_path_free(g, self.length, budget)
        return is_long_cycle_free(g, self.length, budget)

    def has_connectivity(self, g: BipartiteGraph) -> bool:
        if self.connectivity is Connectivity.CONNECTED:
            return is_connected(g)
        if self.connectivity is Connectivity.TWO_CONNECTED:
            return is_two_connected(g)
        return True

    def to_dict(self) -> dict:
        return {'a': self.a, 'b': self.b, 'forbid': self.token, 'connectivity': self.connectivity.value}


@dataclass(frozen=True)
class BlockBoundParams:
    ''' reduced classes a', b' of the even-path argument and the half-length x of the longest cycle '''

    a_prime: int
    b_prime: int
    x: int
    ell: int

    def __post_init__(self):
        values = dict(a_prime=self.a_prime, b_prime=self.b_prime, x=self.x, l=self.ell)
        _require((self.ell + 1) // 2 <= self.x <= self.ell - 2, '⌊(ℓ+1)/2⌋ ≤ x ≤ ℓ−2', **values)
        _require(self.ell - 1 <= self.a_prime <= self.b_prime and self.ell <= self.b_prime,
                 "ℓ−1 ≤ a' ≤ b' and ℓ ≤ b'", **values)


#################### formulas ####################

def thm1_bound(a: int, b: int, ell: int) -> int:
    ''' 2-connected C_{>=2l}-free maximum, attained only by B2(a,b,2l) '''
    _require(b >= a >= ell >= 4, 'b ≥ a ≥ ℓ ≥ 4', a=a, b=b, l=ell)
    return (ell - 2) * b + 2 * (a - ell + 2)


def thm2_bound(a: int, b: int, k: int) -> int:
    ''' connected P_k-free maximum; same value for k = 2l+1 and 2l+2 '''
    _require(k >= 8 and b >= a >= k // 2 and a + b >= k, 'b ≥ a ≥ ⌊k/2⌋, a+b ≥ k, k ≥ 8', a=a, b=b, k=k)
    q = (k - 3) // 2
    return q * b + a - q


def _check_grs(a: int, b: int, ell: int):
    _require(0 <= a <= b and ell >= 1, 'a ≤ b and ℓ ≥ 1', a=a, b=b, l=ell)


def grs_even_branch(a: int, b: int, ell: int) -> str:
    _check_grs(a, b, ell)
    if a <= ell:
        return COMPLETE
    if a <= 2 * ell:
        return STAR_CORE
    return TWO_CORES


def grs_even(a: int, b: int, ell: int) -> int:
    ''' ex_b(a, b, P_{2l+2}) '''
    branch = grs_even_branch(a, b, ell)
    if branch == COMPLETE:
        return a * b
    if branch == STAR_CORE:
        return b * ell
    return (a + b - 2 * ell) * ell


def grs_odd_branch(a: int, b: int, ell: int) -> str:
    ''' branches in listed order; the first match wins '''
    _check_grs(a, b, ell)
    if a <= ell or a == b == ell + 1:
        return COMPLETE
    if ell + 1 <= a < 2 * (ell + 1) and b != ell + 1:
        return PENDANT_CORE
    if a == b == 2 * (ell + 1):
        return DOUBLE_BLOCK
    return TWO_CORES


def grs_odd(a: int, b: int, ell: int) -> int:
    ''' ex_b(a, b, P_{2l+3}) '''
    branch = grs_odd_branch(a, b, ell)
    if branch == COMPLETE:
        return a * b
    if branch == PENDANT_CORE:
        return a + (b - 1) * ell
    if branch == DOUBLE_BLOCK:
        return 2 * (ell + 1) ** 2
    return (a + b - 2 * ell) * ell


def jackson_branch(a: int, b: int, ell: int) -> str:
    _require(0 <= a <= b and ell >= 2, 'a ≤ b and ℓ ≥ 2', a=a, b=b, l=ell)
    if a <= 2 * ell - 2:
        return SMALL_A
    if a >= 2 * ell:
        return LARGE_A
    return GAP


def jackson_cycle_bound(a: int, b: int, ell: int) -> tp.Optional[int]:
    ''' ex_b(a, b, C_{>=2l}); None at a = 2l-1 where no value is stated '''
    branch = jackson_branch(a, b, ell)
    if branch == SMALL_A:
        return (b - 1) * (ell - 1) + a
    if branch == LARGE_A:
        return (a + b - 2 * ell + 3) * (ell - 1)
    return None


def block_merge_bound(p: BlockBoundParams) -> int:
    ''' x(b' - (l-x-2)) + (l-x-1)(a'-x); at most (l-2)b' + a' - (l-2), with equality iff x = l-2 '''
    x, ell = p.x, p.ell
    return x * (p.b_prime - (ell - x - 2)) + (ell - x - 1) * (p.a_prime - x)


def block_merge_ceiling(a_prime: int, b_prime: int, ell: int) -> int:
    return (ell - 2) * b_prime + a_prime - (ell - 2)
