#stdlib
import logging
import typing as tp

#third party
import pandas as pd

#our stuff
import constants as c
from all_theorems import all_theorems
from graphs.search import circumference, longest_path_vertices
from graphs.structure import is_connected, is_two_connected
from research.oracle import compare_with_formula

logger = logging.getLogger('TableLogger')
logger.setLevel(logging.INFO)

ORACLE_COLUMNS = ['theorem', 'a', 'b', 'length', 'formula', 'oracle', 'match',
                  'classes', 'predicted_classes']
CONSTRUCTION_COLUMNS = ['theorem', 'a', 'b', 'length', 'formula', 'edges', 'extremal_length',
                        'free', 'connectivity_ok', 'match']
NULLABLE_INT = ('oracle', 'classes', 'predicted_classes')

SUITES = ('thm1', 'thm2', 'grs', 'jackson', 'constructions')


class ReproductionTable:
    '''
    Grids of (a, b, length) rows comparing closed forms with exhaustive search.

    Attributes:
        amax, bmax (int): grid limits, a <= b
        l_values, k_values (list[int]): explicit length arguments per symbol, or None for every length a theorem admits
        cap (int): oracle edge-bit cap; larger K_{a,b} are left out of oracle suites
    '''

    def __init__(self, amax: int, bmax: int, l_values: tp.Optional[tp.Sequence[int]] = None,
                 k_values: tp.Optional[tp.Sequence[int]] = None,
                 budget: tp.Any = None, workers: tp.Optional[int] = None, cap: tp.Optional[int] = None,
                 allow_class_swap: bool = True):
        self.amax = amax
        self.bmax = bmax
        self.lengths = {'l': l_values, 'k': k_values}
        self.budget = budget
        self.workers = workers
        self.cap = c.ORACLE_EDGE_CAP if cap is None else cap
        self.allow_class_swap = allow_class_swap

    def pairs(self) -> tp.Iterator[tp.Tuple[int, int]]:
        for a in range(1, self.amax + 1):
            for b in range(a, self.bmax + 1):
                yield a, b

    def candidate_lengths(self, theorem: type, a: int, b: int) -> tp.List[int]:
        if self.lengths[theorem.LENGTH_SYMBOL]:
            return list(self.lengths[theorem.LENGTH_SYMBOL])
        # past these lengths every theorem is either silent or K_{a,b} itself
        if theorem.LENGTH_SYMBOL == 'k':
            return list(range(1, 2 * a + 2))
        return list(range(1, a + 2))

    def grid(self, theorem: type, oracle: bool = True) -> tp.List[tp.Tuple[int, int, int]]:
        out = []
        for a, b in self.pairs():
            if oracle and a * b > self.cap:
                continue
            out.extend((a, b, n) for n in self.candidate_lengths(theorem, a, b) if theorem.in_range(a, b, n))
        return out

    #################### suites ####################

    def oracle_rows(self, names: tp.Sequence[str]) -> tp.List[dict]:
        rows = []
        for name in names:
            theorem = all_theorems[name]
            for a, b, n in self.grid(theorem):
                report = compare_with_formula(theorem.params(a, b, n), self.budget, self.workers,
                                              self.allow_class_swap, self.cap)
                row = {
                    'theorem': name, 'a': a, 'b': b, 'length': n,
                    'formula': report['formula_value'],
                    'oracle': report['oracle_value'],
                    'match': bool(report['match'] and report['class_match']),
                    'classes': report['extremal_class_count'],
                    'predicted_classes': report['predicted_class_count'],
                    }
                logger.info(c.match_message(row))
                rows.append(row)
        return rows

    def construction_rows(self) -> tp.List[dict]:
        ''' formula ≡ construction and exact freeness of B2 and B1 over the grid '''
        rows = []
        for name in ('thm1', 'thm2'):
            theorem = all_theorems[name]
            for a, b, n in self.grid(theorem, oracle=False):
                formula = theorem.bound(a, b, n)
                for g in theorem.construct(a, b, n):
                    if name == 'thm1':
                        extremal_length = circumference(g, self.budget)[0]
                        free = extremal_length <= 2 * n - 2
                        connectivity_ok = is_two_connected(g)
                    else:
                        extremal_length = longest_path_vertices(g, self.budget)[0]
                        free = extremal_length <= n - 1
                        connectivity_ok = is_connected(g)
                    rows.append({
                        'theorem': name, 'a': a, 'b': b, 'length': n,
                        'formula': formula, 'edges': g.edge_count,
                        'extremal_length': extremal_length, 'free': free,
                        'connectivity_ok': connectivity_ok,
                        'match': bool(free and connectivity_ok and formula == g.edge_count),
                        })
        return rows

    def build(self, suite: str) -> pd.DataFrame:
        if suite == 'constructions':
            return frame(self.construction_rows(), CONSTRUCTION_COLUMNS)
        if suite == 'grs':
            return frame(self.oracle_rows(['grs_even', 'grs_odd']), ORACLE_COLUMNS)
        if suite in all_theorems:
            return frame(self.oracle_rows([suite]), ORACLE_COLUMNS)
        raise KeyError(f'unknown table suite {suite!r}, expected one of {SUITES}')


def frame(rows: tp.List[dict], columns: tp.List[str]) -> pd.DataFrame:
    df = pd.DataFrame.from_records(rows, columns=columns)
    for col in NULLABLE_INT:
        if col in df.columns:
            df[col] = df[col].astype('Int64')
    return df


def render(df: pd.DataFrame, fmt: str) -> str:
    if fmt == c.JSON:
        return df.to_json(orient='records') + '\n'
    return df.to_csv(index=False)


def all_match(df: pd.DataFrame) -> bool:
    return bool(df['match'].all()) if len(df) else True
