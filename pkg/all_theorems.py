#stdlib
import typing as tp

#our stuff
from graphs.utils import ParameterRangeError
from theorems.formulas import Connectivity, ExtremalParams, Family
from theorems.long_cycles import LongCycles
from theorems.connected_paths import ConnectedPaths
from theorems.grs import GRSEven, GRSOdd
from theorems.jackson import Jackson

#NOTE: this is a dict of every theorem the CLI can evaluate, keyed by its CLI name
#     `bound`, `table` and compare_with_formula all route through it
#
#TO ADD A THEOREM, SUBCLASS theorems.theorem.Theorem AND ADD IT TO THIS DICT
all_theorems = {
    LongCycles.NAME: LongCycles,
    ConnectedPaths.NAME: ConnectedPaths,
    GRSEven.NAME: GRSEven,
    GRSOdd.NAME: GRSOdd,
    Jackson.NAME: Jackson,
    }


def theorem_for(params: ExtremalParams) -> tp.Tuple[type, int]:
    '''
    The theorem that predicts ex for these parameters, with its length argument.

    Raises:
        ParameterRangeError: no theorem covers this family and connectivity class
    '''
    if params.family is Family.LONG_CYCLES:
        if params.connectivity is Connectivity.TWO_CONNECTED:
            return LongCycles, LongCycles.length_from_params(params)
        if params.connectivity is Connectivity.ANY:
            return Jackson, Jackson.length_from_params(params)
    else:
        if params.connectivity is Connectivity.CONNECTED:
            return ConnectedPaths, ConnectedPaths.length_from_params(params)
        if params.connectivity is Connectivity.ANY:
            theorem = GRSEven if params.length % 2 == 0 else GRSOdd
            n = theorem.length_from_params(params)
            if n >= 1:
                return theorem, n
    raise ParameterRangeError(f'no theorem covers {params.token} with connectivity {params.connectivity.value}')
