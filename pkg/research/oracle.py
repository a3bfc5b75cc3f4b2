#stdlib
import time
import logging
import typing as tp
from itertools import combinations
from multiprocessing import Pool
from dataclasses import dataclass, field

#our stuff
import constants as c
from graphs.bipartite import BipartiteGraph, from_edge_mask
from graphs.utils import Budget, OracleCapError, ParameterRangeError
from research.canonical import CanonicalForm, canonical_form, graph_from_form
from theorems.formulas import Connectivity, ExtremalParams

logger = logging.getLogger('OracleLogger')
logger.setLevel(logging.INFO)


@dataclass
class OracleResult:
    '''
    Certified optimum of one extremal problem.

    Attributes:
        params (ExtremalParams)
        max_edges (int): None when no graph in the class is feasible
        extremal_graphs (list[BipartiteGraph]): canonical representatives, sorted by canonical form
        graphs_scanned (int): candidates evaluated, independent of the worker count
        elapsed (float): wall-clock seconds
        allow_class_swap (bool): whether A/B swap was part of the symmetry group
    '''

    params: ExtremalParams
    max_edges: tp.Optional[int]
    extremal_graphs: tp.List[BipartiteGraph] = field(default_factory=list)
    graphs_scanned: int = 0
    elapsed: float = 0.0
    allow_class_swap: bool = True

    @property
    def class_count(self) -> int:
        return len(self.extremal_graphs)

    def forms(self) -> tp.List[CanonicalForm]:
        return [canonical_form(g, self.allow_class_swap) for g in self.extremal_graphs]

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            c.PARAMS: self.params.to_dict(),
            c.MAX_EDGES: self.max_edges,
            'class_count': self.class_count,
            c.EXTREMAL_GRAPHS: [g.to_dict() for g in self.extremal_graphs],
            c.GRAPHS_SCANNED: self.graphs_scanned,
            'allow_class_swap': self.allow_class_swap,
            }
        if include_timing:
            out[c.ELAPSED] = round(self.elapsed, 3)
        return out


def min_edges(params: ExtremalParams) -> int:
    ''' fewest edges a graph of the connectivity class can have '''
    n = params.a + params.b
    if params.connectivity is Connectivity.CONNECTED:
        return n - 1
    if params.connectivity is Connectivity.TWO_CONNECTED:
        return n
    return 0


def feasible(params: ExtremalParams, g: BipartiteGraph, budget: tp.Any = None) -> bool:
    ''' cheap degree filters, then connectivity, then the exact freeness search '''
    if params.connectivity is Connectivity.CONNECTED and g.n >= 2 and g.min_degree() < 1:
        return False
    if params.connectivity is Connectivity.TWO_CONNECTED and g.min_degree() < 2:
        return False
    if not params.has_connectivity(g):
        return False
    return params.is_free(g, budget)


def _scan_shard(task: tp.Tuple[ExtremalParams, int, int, float]) -> tp.Tuple[tp.List[int], int]:
    '''
    Every edge mask with `layer` bits whose highest bit is `top`.

    Runs in a worker process, so it takes plain picklable arguments.
    '''
    params, layer, top, seconds = task
    budget = Budget(seconds)
    bits = [1 << i for i in range(top)]
    found = []
    scanned = 0
    for rest in combinations(bits, layer - 1):
        mask = (1 << top) | sum(rest)
        scanned += 1
        if feasible(params, from_edge_mask(params.a, params.b, mask), budget):
            found.append(mask)
    return found, scanned


class LayerScanner:
    ''' scans one popcount layer of K_{a,b}'s edge masks, sharded by the highest set bit '''

    def __init__(self, params: ExtremalParams, budget: Budget, pool: tp.Optional[tp.Any] = None):
        self.params = params
        self.budget = budget
        self.pool = pool
        self.scanned = 0

    def scan(self, layer: int) -> tp.List[int]:
        self.budget.check()
        p = self.params
        if layer == 0:
            self.scanned += 1
            return [0] if feasible(p, from_edge_mask(p.a, p.b, 0), self.budget) else []
        tasks = [(p, layer, top, self.budget.remaining() or 1e-9) for top in range(layer - 1, p.a * p.b)]
        if self.pool is None:
            results = [_scan_shard(t) for t in tasks]
        else:
            results = self.pool.map(_scan_shard, tasks)
        found = []
        for masks, scanned in results:
            found.extend(masks)
            self.scanned += scanned
        logger.info(f'{p.token} on K_{{{p.a},{p.b}}}: layer {layer} has {len(found)} feasible graphs')
        return sorted(found)


def predict(params: ExtremalParams) -> tp.Optional[int]:
    ''' the closed-form value for params, when a theorem states one '''
    from all_theorems import theorem_for
    try:
        theorem, n = theorem_for(params)
    except ParameterRangeError:
        return None
    if not theorem.in_range(params.a, params.b, n):
        return None
    return theorem.bound(params.a, params.b, n)


def _hereditary_from(params: ExtremalParams, layer: int) -> bool:
    '''
    Deleting an edge keeps feasibility from this layer upwards: always for the
    unrestricted class, and for connected graphs once a cycle edge must exist.
    '''
    if params.connectivity is Connectivity.ANY:
        return True
    if params.connectivity is Connectivity.CONNECTED:
        return layer >= min_edges(params)
    return False


def _scan_layers(params: ExtremalParams, scanner: LayerScanner, predicted: tp.Optional[int]) -> tp.Tuple[tp.Optional[int], tp.List[int]]:
    top = params.a * params.b
    bottom = min_edges(params)
    if bottom > top:
        return None, []

    if predicted is not None and bottom <= predicted + 1 <= top and _hereditary_from(params, predicted + 1):
        best, best_masks = None, []
        layer = predicted + 1
        while layer <= top:
            masks = scanner.scan(layer)
            if not masks:
                break
            best, best_masks = layer, masks
            layer += 1
        if best is not None:
            return best, best_masks
        start = predicted
    else:
        start = top

    for layer in range(start, bottom - 1, -1):
        masks = scanner.scan(layer)
        if masks:
            return layer, masks
    return None, []


def _representatives(params: ExtremalParams, masks: tp.Iterable[int], allow_class_swap: bool) -> tp.List[BipartiteGraph]:
    forms = sorted({canonical_form(from_edge_mask(params.a, params.b, m), allow_class_swap) for m in masks})
    return [graph_from_form(f) for f in forms]


def _check_cap(params: ExtremalParams, cap: tp.Optional[int]):
    cap = c.ORACLE_EDGE_CAP if cap is None else cap
    if params.a * params.b > cap:
        raise OracleCapError(f'K_{{{params.a},{params.b}}} has {params.a * params.b} edge bits, cap is {cap}')


def enumerate_extremal(params: ExtremalParams, budget: tp.Any = None, workers: tp.Optional[int] = None,
                       allow_class_swap: bool = True, cap: tp.Optional[int] = None,
                       predicted: tp.Optional[int] = None, use_prediction: bool = True) -> OracleResult:
    '''
    Exact ex for params by exhaustive scan of K_{a,b}'s spanning subgraphs.

    Layers are scanned by edge count. For classes closed under edge deletion the
    scan starts just above the predicted value and stops at the first empty
    layer; otherwise it walks down from a*b. Extremal graphs are reduced to one
    canonical representative per isomorphism class.

    Raises:
        OracleCapError: a*b exceeds the cap
        SearchBudgetExceeded: the budget ran out
    '''
    _check_cap(params, cap)
    budget = Budget.coerce(budget)
    workers = c.DEFAULT_WORKERS if workers is None else workers
    if predicted is None and use_prediction:
        predicted = predict(params)
    logger.info(f'oracle {params.token} on K_{{{params.a},{params.b}}} ({params.connectivity.value}), predicted {predicted}, {workers} workers')

    start = time.perf_counter()
    if workers > 1:
        with Pool(workers) as pool:
            scanner = LayerScanner(params, budget, pool)
            best, masks = _scan_layers(params, scanner, predicted)
    else:
        scanner = LayerScanner(params, budget)
        best, masks = _scan_layers(params, scanner, predicted)

    result = OracleResult(
        params=params,
        max_edges=best,
        extremal_graphs=_representatives(params, masks, allow_class_swap),
        graphs_scanned=scanner.scanned,
        elapsed=time.perf_counter() - start,
        allow_class_swap=allow_class_swap,
        )
    logger.info(f'oracle done: max {result.max_edges}, {result.class_count} classes, {result.graphs_scanned} scanned')
    return result


def naive_scan(params: ExtremalParams, budget: tp.Any = None, allow_class_swap: bool = True,
               cap: tp.Optional[int] = None) -> OracleResult:
    ''' every mask of K_{a,b}, no filters, no layer order; reference for enumerate_extremal '''
    _check_cap(params, cap)
    budget = Budget.coerce(budget)
    start = time.perf_counter()
    best, masks = None, []
    total = 1 << (params.a * params.b)
    for mask in range(total):
        g = from_edge_mask(params.a, params.b, mask)
        if not (params.has_connectivity(g) and params.is_free(g, budget)):
            continue
        if best is None or g.edge_count > best:
            best, masks = g.edge_count, [mask]
        elif g.edge_count == best:
            masks.append(mask)
    return OracleResult(
        params=params,
        max_edges=best,
        extremal_graphs=_representatives(params, masks, allow_class_swap),
        graphs_scanned=total,
        elapsed=time.perf_counter() - start,
        allow_class_swap=allow_class_swap,
        )


def compare_with_formula(params: ExtremalParams, budget: tp.Any = None, workers: tp.Optional[int] = None,
                         allow_class_swap: bool = True, cap: tp.Optional[int] = None) -> dict:
    '''
    Run the oracle and set it against the theorem covering params.

    Returns:
        dict with theorem, params, formula_value, oracle_value, match,
        extremal_class_count and predicted_class_count (None when not characterised)

    Raises:
        ParameterRangeError, StatementGap: params outside the theorem's statement
    '''
    from all_theorems import theorem_for
    theorem, n = theorem_for(params)
    formula_value = theorem.bound(params.a, params.b, n)
    if not theorem.in_range(params.a, params.b, n):
        raise ParameterRangeError(f'{theorem.NAME} is not claimed at a={params.a}, b={params.b}, {theorem.LENGTH_SYMBOL}={n}')
    result = enumerate_extremal(params, budget, workers, allow_class_swap, cap, predicted=formula_value)
    predicted_count = theorem.predicted_class_count(params.a, params.b, n, allow_class_swap)
    return {
        c.THEOREM: theorem.NAME,
        c.PARAMS: params.to_dict(),
        'length': n,
        'formula_value': formula_value,
        'oracle_value': result.max_edges,
        'match': formula_value == result.max_edges,
        'extremal_class_count': result.class_count,
        'predicted_class_count': predicted_count,
        'class_match': predicted_count is None or predicted_count == result.class_count,
        }
