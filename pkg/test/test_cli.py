import sys
import os

parent_dir = os.path.abspath(os.path.join(os.path.dirname(__file__), os.pardir))
sys.path.append(parent_dir)

import io
import json
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

import constants as c
import turan
from all_theorems import all_theorems
from graphs.bipartite import complete_bipartite
from graphs.graph6 import read_graph6_lines, to_graph6
from theorems.constructions import build_B2


def run(*argv, stdin: str = None):
    ''' exit code and stdout of one CLI call '''
    out, err = io.StringIO(), io.StringIO()
    saved = sys.stdin
    if stdin is not None:
        sys.stdin = io.StringIO(stdin)
    try:
        with redirect_stdout(out), redirect_stderr(err):
            code = turan.main(list(argv))
    finally:
        sys.stdin = saved
    return code, out.getvalue()


class TestBound(unittest.TestCase):

    def test_long_cycles(self):
        code, out = run('bound', 'thm1', '--a', '4', '--b', '4', '--l', '4')
        self.assertEqual(code, c.EXIT_OK)
        record = json.loads(out)
        self.assertEqual(record[c.VALUE], 12)
        self.assertEqual(record[c.PARAMS], {'a': 4, 'b': 4, 'l': 4})

    def test_csv(self):
        code, out = run('bound', 'thm2', '--a', '4', '--b', '5', '--k', '9', '--format', 'csv')
        self.assertEqual(code, c.EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[0].split(','), ['a', 'b', 'k', 'theorem', 'branch', 'value'])
        self.assertTrue(lines[1].endswith(',16'))

    def test_statement_gap(self):
        code, out = run('bound', 'jackson', '--a', '5', '--b', '6', '--l', '3')
        self.assertEqual(code, c.EXIT_GAP)
        self.assertEqual(json.loads(out)[c.VALUE], c.STATEMENT_GAP)

    def test_out_of_range(self):
        code, out = run('bound', 'thm1', '--a', '3', '--b', '4', '--l', '3')
        self.assertEqual(code, c.EXIT_RANGE)
        self.assertEqual(out, '')

    def test_missing_length(self):
        code, _ = run('bound', 'thm2', '--a', '4', '--b', '4')
        self.assertEqual(code, c.EXIT_RANGE)

    def test_ranges_in_help(self):
        out = io.StringIO()
        with redirect_stdout(out), self.assertRaises(SystemExit):
            turan.main(['bound', '--help'])
        for name in all_theorems:
            self.assertIn(all_theorems[name].PRECONDITION, out.getvalue())

    def test_usage(self):
        with self.assertRaises(SystemExit) as ctx:
            run('bound', 'thm9', '--a', '4', '--b', '4')
        self.assertEqual(ctx.exception.code, c.EXIT_USAGE)
        code, _ = run('--budget', '-1', 'bound', 'thm1', '--a', '4', '--b', '4', '--l', '4')
        self.assertEqual(code, c.EXIT_USAGE)


class TestConstruct(unittest.TestCase):

    def test_B2_graph6(self):
        code, out = run('construct', 'B2', '--a', '4', '--b', '5', '--l', '4')
        self.assertEqual(code, c.EXIT_OK)
        graphs = read_graph6_lines(out, 4)
        self.assertEqual(graphs, [build_B2(4, 5, 4)])

    def test_B1_family(self):
        code, out = run('construct', 'B1_family', '--a', '4', '--b', '4', '--k', '8')
        self.assertEqual(code, c.EXIT_OK)
        self.assertEqual(len(out.splitlines()), 2)

    def test_layout(self):
        code, out = run('construct', 'B1', '--a', '4', '--b', '4', '--k', '8', '--layout', '1,1,0,0', '--format', 'json')
        self.assertEqual(code, c.EXIT_OK)
        self.assertEqual(len(json.loads(out)[c.EDGES]), 10)

    def test_dot(self):
        code, out = run('construct', 'grs', '--a', '3', '--b', '4', '--l', '2', '--format', 'dot')
        self.assertEqual(code, c.EXIT_OK)
        self.assertIn('grs_0', out)

    def test_range(self):
        code, _ = run('construct', 'B2', '--a', '3', '--b', '4', '--l', '3')
        self.assertEqual(code, c.EXIT_RANGE)


class TestCheck(unittest.TestCase):

    def setUp(self):
        self.k33 = to_graph6(complete_bipartite(3, 3)).decode() + '\n'

    def test_circumference_from_stdin(self):
        code, out = run('check', 'circumference', '--a-size', '3', stdin=self.k33)
        self.assertEqual(code, c.EXIT_OK)
        self.assertEqual(json.loads(out)['circumference'], 6)

    def test_path_freeness_from_file(self):
        with tempfile.NamedTemporaryFile('w', suffix='.g6', delete=False) as f:
            f.write(self.k33 * 2)
        try:
            code, out = run('check', 'pk_free', '--a-size', '3', '--k', '7', '--input', f.name)
            self.assertEqual(code, c.EXIT_OK)
            self.assertEqual(len(out.splitlines()), 2)
            code, out = run('check', 'pk_free', '--a-size', '3', '--k', '6', '--input', f.name)
            self.assertEqual(code, c.EXIT_CHECK_FAILED)
            self.assertEqual(len(json.loads(out.splitlines()[0])['witness']['vertices']), 6)
        finally:
            os.remove(f.name)

    def test_jackson(self):
        code, out = run('check', 'jackson', '--a-size', '3', stdin=self.k33)
        self.assertEqual(code, c.EXIT_OK)
        report = json.loads(out)
        self.assertEqual((report['bound'], report['circumference']), (6, 6))
        self.assertTrue(report['holds'])

    def test_connectivity(self):
        code, out = run('check', 'connectivity', '--a-size', '3', stdin=self.k33)
        self.assertEqual(code, c.EXIT_OK)
        report = json.loads(out)
        self.assertTrue(report['two_connected'])
        self.assertEqual(report['components'], 1)

    def test_bad_input(self):
        code, _ = run('check', 'circumference', '--a-size', '3', stdin='')
        self.assertEqual(code, c.EXIT_RANGE)
        code, _ = run('check', 'circumference', '--a-size', '3', stdin='C\n')
        self.assertEqual(code, c.EXIT_USAGE)
        code, out = run('check', 'connectivity', '--a-size', '2', stdin='Cé\n')
        self.assertEqual(code, c.EXIT_USAGE)
        self.assertEqual(out, '')

    def test_jackson_seed(self):
        b2 = to_graph6(build_B2(4, 4, 4)).decode() + '\n'
        for seed in ('1', '7', '2024'):
            code, first = run('--seed', seed, 'check', 'jackson', '--a-size', '4', stdin=b2)
            self.assertEqual(code, c.EXIT_OK)
            self.assertTrue(json.loads(first)['holds'])
            _, again = run('--seed', seed, 'check', 'jackson', '--a-size', '4', stdin=b2)
            self.assertEqual(first, again)


class TestOracle(unittest.TestCase):

    def test_long_cycles(self):
        code, out = run('oracle', '--a', '3', '--b', '4', '--forbid', 'Cge6')
        self.assertEqual(code, c.EXIT_OK)
        record = json.loads(out)
        self.assertEqual(record[c.MAX_EDGES], 9)
        self.assertNotIn(c.ELAPSED, record)

    def test_compare(self):
        code, out = run('oracle', '--a', '3', '--b', '4', '--forbid', 'P6', '--compare')
        self.assertEqual(code, c.EXIT_OK)
        self.assertTrue(json.loads(out)['match'])

    def test_cap(self):
        code, out = run('oracle', '--a', '5', '--b', '5', '--forbid', 'P8')
        self.assertEqual(code, c.EXIT_CAP)
        self.assertEqual(out, '')

    def test_bad_token(self):
        code, _ = run('oracle', '--a', '3', '--b', '4', '--forbid', 'Cge7')
        self.assertEqual(code, c.EXIT_RANGE)


class TestTable(unittest.TestCase):

    def test_connected_paths(self):
        code, out = run('table', 'thm2', '--amax', '4', '--bmax', '4')
        self.assertEqual(code, c.EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(len(lines), 2)
        self.assertTrue(lines[1].startswith('thm2,4,4,8,10,10,True'))


class TestRunConfig(unittest.TestCase):

    def test_same_config_same_stdout(self):
        for argv in (['oracle', '--a', '3', '--b', '4', '--forbid', 'P6', '--compare'],
                     ['table', 'grs', '--amax', '3', '--bmax', '3']):
            one = run('--workers', '1', '--seed', '5', *argv)
            two = run('--workers', '2', '--seed', '5', *argv)
            self.assertEqual(one[0], c.EXIT_OK)
            self.assertEqual(one, two)


if __name__ == '__main__':
    unittest.main()
