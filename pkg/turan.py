#stdlib
import sys
import json
import logging
import argparse
import typing as tp
from dataclasses import dataclass

#third party
import numpy as np

#our stuff
import constants as c
from all_theorems import all_theorems
from graphs.graph6 import read_graph6_lines, write_graph6_lines
from graphs.search import (PathWitness, circumference, detect_jackson_config, endpoint_case,
                           extend_to_maximal_path, find_long_cycle, find_path, jackson_bound,
                           longest_path_vertices)
from graphs.structure import block_decomposition, components, is_connected, is_two_connected
from graphs.utils import Budget, NotTwoConnectedError, ParameterRangeError, handle_turan_errors
from research.oracle import compare_with_formula, enumerate_extremal
from research.tables import SUITES, ReproductionTable, all_match, frame, render
from theorems.constructions import (PendantLayout, build_B1, build_B2, build_grs_extremal,
                                    enumerate_B1_family)
from theorems.formulas import Connectivity, ExtremalParams, Parity

logger = logging.getLogger('TuranLogger')
logger.setLevel(logging.INFO)

QUERIES = ('connectivity', 'circumference', 'longest_path', 'pk_free', 'cfree', 'jackson')
CONSTRUCTIONS = ('B2', 'B1', 'B1_family', 'grs')

FORMATS_HELP = '''output formats:
  json     one JSON document per line, keys sorted (bound, check, oracle, table)
  csv      header plus one row per grid point (bound, table)
  graph6   one header-less graph6 line per graph; pair it with --a-size when reading back
  dot      Graphviz text, colour class A and B on separate ranks

environment: TURAN_BUDGET, TURAN_WORKERS, TURAN_ORACLE_CAP, TURAN_SEED set the defaults,
optionally from a .env file in the project root.
exit codes: 0 ok, 1 check failed, 2 usage or graph input, 3 parameter range,
4 statement gap, 5 budget exhausted, 6 oracle cap exceeded.'''


@dataclass(frozen=True)
class RunConfig:
    ''' everything that determines a run's stdout '''

    command: str
    fmt: str
    budget: float
    workers: int
    seed: int
    verbose: bool = False

    def __post_init__(self):
        if self.fmt not in c.OUTPUT_FORMATS:
            raise ParameterRangeError(f'unknown output format {self.fmt!r}')
        if self.budget <= 0:
            raise ParameterRangeError(f'--budget must be positive, got {self.budget}')
        if self.workers < 1:
            raise ParameterRangeError(f'--workers must be at least 1, got {self.workers}')


RANGES_HELP = 'stated ranges:\n' + '\n'.join(
    f'  {name:<9}{all_theorems[name].PRECONDITION}' for name in sorted(all_theorems))

DEFAULT_FORMATS = {'bound': c.JSON, 'construct': c.GRAPH6, 'check': c.JSON, 'oracle': c.JSON, 'table': c.CSV}


def get_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='turan',
        description='Bipartite Turán numbers for long paths and cycles: closed forms, extremal graphs, exact checks.',
        epilog=FORMATS_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument('--budget', type=float, default=c.DEFAULT_BUDGET, help='seconds per exact search / oracle run')
    parser.add_argument('--workers', type=int, default=c.DEFAULT_WORKERS, help='oracle worker processes')
    parser.add_argument('--seed', type=int, default=c.DEFAULT_SEED, help='seed for the jackson check\'s starting edge when --path is not given')
    parser.add_argument('--verbose', '-v', action='store_true', help='log progress to stderr')
    sub = parser.add_subparsers(dest='command', required=True)

    bound = sub.add_parser('bound', help='evaluate a closed-form extremal number', description=RANGES_HELP,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
    bound.add_argument('theorem', choices=sorted(all_theorems))
    bound.add_argument('--a', type=int, required=True)
    bound.add_argument('--b', type=int, required=True)
    bound.add_argument('--l', type=int, help='cycle/GRS length parameter ℓ')
    bound.add_argument('--k', type=int, help='path length k (thm2)')
    bound.add_argument('--format', dest='fmt', choices=(c.JSON, c.CSV))

    construct = sub.add_parser('construct', help='build an extremal graph')
    construct.add_argument('family', choices=CONSTRUCTIONS)
    construct.add_argument('--a', type=int, required=True)
    construct.add_argument('--b', type=int, required=True)
    construct.add_argument('--l', type=int)
    construct.add_argument('--k', type=int)
    construct.add_argument('--layout', help='B1 pendant counts per B-vertex, e.g. 1,1,0,0')
    construct.add_argument('--parity', choices=[p.value for p in Parity], default=Parity.EVEN.value)
    construct.add_argument('--format', dest='fmt', choices=(c.GRAPH6, c.DOT, c.JSON))

    check = sub.add_parser('check', help='exact structural queries on graph6 input')
    check.add_argument('query', choices=QUERIES)
    check.add_argument('--a-size', type=int, required=True, help='size of colour class A (first vertices)')
    check.add_argument('--input', help='graph6 file, one graph per line (default: stdin)')
    check.add_argument('--k', type=int, help='pk_free: path length')
    check.add_argument('--l', type=int, help='cfree: cycles of length at least 2ℓ')
    check.add_argument('--path', help='jackson: maximal path as comma-separated vertices')
    check.add_argument('--format', dest='fmt', choices=(c.JSON,))

    oracle = sub.add_parser('oracle', help='exhaustive ex_b over all subgraphs of K_{a,b}')
    oracle.add_argument('--a', type=int, required=True)
    oracle.add_argument('--b', type=int, required=True)
    oracle.add_argument('--forbid', required=True, help=f'{c.PATH_TOKEN}<k> or {c.LONG_CYCLE_TOKEN}<2ℓ>')
    oracle.add_argument('--connectivity', choices=[x.value for x in Connectivity], default=Connectivity.ANY.value)
    oracle.add_argument('--no-class-swap', action='store_true', help='treat A and B as labeled when a = b')
    oracle.add_argument('--cap', type=int, default=c.ORACLE_EDGE_CAP, help='largest a*b scanned')
    oracle.add_argument('--compare', action='store_true', help='report against the covering theorem')
    oracle.add_argument('--timing', action='store_true', help='include elapsed seconds in the JSON')
    oracle.add_argument('--format', dest='fmt', choices=(c.JSON, c.GRAPH6))

    table = sub.add_parser('table', help='reproduction tables, formula against oracle')
    table.add_argument('suite', choices=SUITES)
    table.add_argument('--amax', type=int, required=True)
    table.add_argument('--bmax', type=int, required=True)
    table.add_argument('--l', type=int, nargs='+')
    table.add_argument('--k', type=int, nargs='+')
    table.add_argument('--cap', type=int, default=c.ORACLE_EDGE_CAP)
    table.add_argument('--format', dest='fmt', choices=(c.CSV, c.JSON))
    return parser


_handler = None

def configure_logging(verbose: bool):
    ''' one stderr handler; stdout stays machine-readable '''
    global _handler
    root = logging.getLogger()
    if _handler is not None:
        root.removeHandler(_handler)
    _handler = logging.StreamHandler(sys.stderr)
    _handler.setFormatter(logging.Formatter(c.LOGGING_FORMAT))
    _handler.setLevel(logging.INFO if verbose or c.DEBUG else logging.WARNING)
    root.addHandler(_handler)
    root.setLevel(logging.INFO)


def emit(obj: tp.Any):
    print(json.dumps(obj, sort_keys=True, ensure_ascii=False))


def note(message: str):
    print(message, file=sys.stderr)


def _length(args: argparse.Namespace, symbol: str, what: str) -> int:
    value = getattr(args, symbol)
    if value is None:
        raise ParameterRangeError(f'{what} needs --{symbol}')
    return value


#################### commands ####################

@handle_turan_errors
def cmd_bound(args: argparse.Namespace, config: RunConfig) -> int:
    theorem = all_theorems[args.theorem]
    n = _length(args, theorem.LENGTH_SYMBOL, theorem.NAME)
    record = theorem.evaluate(args.a, args.b, n)
    gap = record[c.VALUE] is None
    if gap:
        record[c.VALUE] = c.STATEMENT_GAP
        note(f'{c.WARNING}{theorem.NAME}: {c.STATEMENT_GAP}{c.ENDC}')
    if config.fmt == c.CSV:
        flat = dict(record[c.PARAMS], theorem=record[c.THEOREM], branch=record[c.BRANCH], value=record[c.VALUE])
        print(frame([flat], list(flat)).to_csv(index=False), end='')
    else:
        emit(record)
    return c.EXIT_GAP if gap else c.EXIT_OK


@handle_turan_errors
def cmd_construct(args: argparse.Namespace, config: RunConfig) -> int:
    if args.family == 'B2':
        graphs = [build_B2(args.a, args.b, _length(args, 'l', 'B2'))]
    elif args.family == 'B1':
        layout = None
        if args.layout:
            layout = PendantLayout(tuple(int(x) for x in args.layout.split(',')))
        graphs = [build_B1(args.a, args.b, _length(args, 'k', 'B1'), layout)]
    elif args.family == 'B1_family':
        graphs = enumerate_B1_family(args.a, args.b, _length(args, 'k', 'B1_family'))
    else:
        graphs = [build_grs_extremal(args.a, args.b, _length(args, 'l', 'grs'), args.parity)]

    if config.fmt == c.DOT:
        print(''.join(g.to_dot(f'{args.family}_{i}') for i, g in enumerate(graphs)), end='')
    elif config.fmt == c.JSON:
        for g in graphs:
            emit(g.to_dict())
    else:
        print(write_graph6_lines(graphs), end='')
    return c.EXIT_OK


def _check_one(g, args: argparse.Namespace, budget: float, seed: int) -> tp.Tuple[dict, bool]:
    ''' the report for one graph and whether the check passed '''
    report = {c.A_SIZE: g.a_size, c.B_SIZE: g.b_size, 'query': args.query}
    ok = True
    if args.query == 'connectivity':
        report['connected'] = is_connected(g)
        report['two_connected'] = is_two_connected(g)
        report['components'] = len(components(g))
        if report['connected']:
            report['blocks'] = block_decomposition(g).to_dict()
    elif args.query == 'circumference':
        length, witness = circumference(g, Budget(budget))
        report['circumference'] = length
        report['witness'] = witness.to_dict() if witness else None
    elif args.query == 'longest_path':
        count, witness = longest_path_vertices(g, Budget(budget))
        report['longest_path'] = count
        report['witness'] = witness.to_dict()
    elif args.query == 'pk_free':
        k = _length(args, 'k', 'pk_free')
        witness = find_path(g, k, Budget(budget))
        ok = witness is None
        report.update(k=k, free=ok, witness=None if ok else witness.to_dict())
    elif args.query == 'cfree':
        ell = _length(args, 'l', 'cfree')
        witness = find_long_cycle(g, ell, Budget(budget))
        ok = witness is None
        report.update(l=ell, free=ok, witness=None if ok else witness.to_dict())
    else:
        if not g.edge_count:
            raise NotTwoConnectedError(f'{g} is not 2-connected')
        if args.path:
            path = PathWitness(tuple(int(x) for x in args.path.split(',')))
        else:
            edges = g.edges()
            u, v = edges[int(np.random.default_rng(seed).integers(len(edges)))]
            path = extend_to_maximal_path(g, PathWitness((u, v)))
        bound = jackson_bound(g, path)
        length, _ = circumference(g, Budget(budget))
        config = detect_jackson_config(g, path)
        ok = length >= bound
        report.update(path=path.to_dict(), bound=bound, circumference=length, holds=ok,
                      case=endpoint_case(g, path), config=config.to_dict() if config else None)
    return report, ok


@handle_turan_errors
def cmd_check(args: argparse.Namespace, config: RunConfig) -> int:
    if args.input:
        with open(args.input) as f:
            text = f.read()
    else:
        text = sys.stdin.read()
    graphs = read_graph6_lines(text, args.a_size)
    if not graphs:
        raise ParameterRangeError('no graph6 input given')
    passed = True
    for g in graphs:
        report, ok = _check_one(g, args, config.budget, config.seed)
        emit(report)
        passed = passed and ok
    return c.EXIT_OK if passed else c.EXIT_CHECK_FAILED


@handle_turan_errors
def cmd_oracle(args: argparse.Namespace, config: RunConfig) -> int:
    params = ExtremalParams.parse(args.a, args.b, args.forbid, args.connectivity)
    allow_swap = not args.no_class_swap
    note(c.oracle_start_message(params))
    if args.compare:
        report = compare_with_formula(params, Budget(config.budget), config.workers, allow_swap, args.cap)
        emit(report)
        note(c.match_message(dict(report, a=args.a, b=args.b)))
        return c.EXIT_OK if report['match'] and report['class_match'] else c.EXIT_CHECK_FAILED

    result = enumerate_extremal(params, Budget(config.budget), config.workers, allow_swap, args.cap)
    note(c.oracle_done_message(result))
    if config.fmt == c.GRAPH6:
        print(write_graph6_lines(result.extremal_graphs), end='')
    else:
        emit(result.to_dict(include_timing=args.timing))
    return c.EXIT_OK


@handle_turan_errors
def cmd_table(args: argparse.Namespace, config: RunConfig) -> int:
    table = ReproductionTable(args.amax, args.bmax, args.l, args.k, config.budget, config.workers, args.cap)
    df = table.build(args.suite)
    print(render(df, config.fmt), end='')
    ok = all_match(df)
    if not ok:
        note(f'{c.FAIL}{int((~df["match"].astype(bool)).sum())} rows do not match{c.ENDC}')
    return c.EXIT_OK if ok else c.EXIT_CHECK_FAILED


COMMANDS = {
    'bound': cmd_bound,
    'construct': cmd_construct,
    'check': cmd_check,
    'oracle': cmd_oracle,
    'table': cmd_table,
    }


def main(argv: tp.Optional[tp.Sequence[str]] = None) -> int:
    args = get_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        config = RunConfig(
            command=args.command,
            fmt=args.fmt or DEFAULT_FORMATS[args.command],
            budget=args.budget,
            workers=args.workers,
            seed=args.seed,
            verbose=args.verbose,
        )
    except ParameterRangeError as e:
        logger.error(str(e))
        return c.EXIT_USAGE
    return COMMANDS[args.command](args, config)


if __name__ == '__main__':
    sys.exit(main())
