# Copyright (C) lqmatch contributors, see LICENSE for text of ISC license

import io
import json
import os
import shutil
import tempfile
import unittest
from unittest import mock

import lqmatch.cli
import lqmatch.fpt
import lqmatch.gen
import lqmatch.instance

hospital_text = """@lqmatch v1
agent r1: h k
agent r2: h
agent r3: k h
resource h [1,2]: r1 r2 r3
resource k [0,1]: r3 r1
"""

broken_text = """@lqmatch v1
agent a1: b1
resource b1 [2,1]: a1
"""


class CommandLineTestCase(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()
        self.base = self._instance('base.lq', lqmatch.gen.gen_fig1())
        self.b1lq = self._instance('b1lq.lq',
                                   lqmatch.gen.gen_fig1(lqmatch.gen.B1LQ))
        self.bothlq = self._instance('bothlq.lq',
                                     lqmatch.gen.gen_fig1(lqmatch.gen.BOTHLQ))
        self.hospital = self._file('hospital.lq', hospital_text)

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def _file(self, name, text):
        path = os.path.join(self.tmpdir, name)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        return path

    def _instance(self, name, inst):
        return self._file(name, lqmatch.instance.to_text(inst))

    def _run(self, *argv):
        out = io.StringIO()
        err = io.StringIO()
        status = lqmatch.cli.dispatch(list(argv), out, err)
        return (status, out.getvalue(), err.getvalue())

    def _run_json(self, *argv):
        (status, out, _) = self._run(*(argv + ('--json',)))
        return (status, json.loads(out))

    def testSolveEfm(self):
        (status, out, _) = self._run('solve-efm', self.base)
        self.assertEqual(status, lqmatch.cli.EXIT_OK)
        self.assertTrue('size: 1' in out)
        self.assertTrue('a1 b2' in out)

    def testSolveEfmNone(self):
        (status, out, _) = self._run('solve-efm', self.bothlq)
        self.assertEqual(status, lqmatch.cli.EXIT_NONE)
        self.assertTrue('verdict: none' in out)

    def testSolveRsmJson(self):
        (status, data) = self._run_json('solve-rsm', self.bothlq)
        self.assertEqual(status, lqmatch.cli.EXIT_OK)
        self.assertEqual(data['command'], 'solve-rsm')
        self.assertEqual(data['verdict'], 'found')
        self.assertEqual(data['size'], 2)
        self.assertEqual(data['matching'], [['a1', 'b2'], ['a2', 'b1']])
        self.assertEqual(data['stats']['assignments_enumerated'], 1)
        self.assertEqual(data['stats']['assignment_bound'], 2)

    def testSolveStatsText(self):
        (status, out, _) = self._run('solve-efm', self.base)
        self.assertEqual(status, lqmatch.cli.EXIT_OK)
        self.assertTrue('assignments_enumerated: 1' in out.splitlines())
        self.assertTrue('assignment_bound: 1' in out.splitlines())

    def testClonedBound(self):
        (status, data) = self._run_json('solve-rsm', self.hospital,
                                        '--clone')
        self.assertEqual(status, lqmatch.cli.EXIT_OK)
        (cloned, _) = lqmatch.instance.clone_to_one_one(
            lqmatch.instance.from_text(hospital_text))
        self.assertEqual(data['stats']['assignment_bound'],
                         lqmatch.fpt.assignment_bound(cloned))

    def testVerboseOnEveryCall(self):
        (_, _, err) = self._run('solve-efm', self.base, '-v')
        self.assertTrue('lqmatch.fpt: DEBUG:' in err)
        (_, _, err) = self._run('solve-efm', self.base)
        self.assertFalse('DEBUG' in err)
        (_, _, err) = self._run('solve-efm', self.base, '-v')
        self.assertTrue('lqmatch.fpt: DEBUG:' in err)

    def testSolveCloned(self):
        (status, data) = self._run_json('solve-efm', self.hospital, '--clone')
        self.assertEqual(status, lqmatch.cli.EXIT_OK)
        self.assertEqual(data['size'], 3)

    def testSolveNotOneOne(self):
        (status, _, err) = self._run('solve-efm', self.hospital)
        self.assertEqual(status, lqmatch.cli.EXIT_INPUT)
        self.assertTrue('ONE-ONE-LQ' in err)

    def testJsonDeterministic(self):
        (_, first) = self._run_json('solve-efm', self.b1lq)
        (_, second) = self._run_json('solve-efm', self.b1lq)
        del first['stats']['elapsed_ms']
        del second['stats']['elapsed_ms']
        self.assertEqual(first, second)

    def testParams(self):
        (status, data) = self._run_json('params', self.base)
        self.assertEqual(status, lqmatch.cli.EXIT_OK)
        self.assertEqual(data['params'], {'q': 1, 'ell_lq': 1, 'd': 1,
                                          'n_d': 1, 'a_bar': 1, 't': 1,
                                          's': 1})

    def testParamsText(self):
        (status, out, _) = self._run('params', self.base)
        self.assertEqual(status, lqmatch.cli.EXIT_OK)
        self.assertTrue('ell_lq: 1' in out.splitlines())

    def testBudget(self):
        (status, data) = self._run_json('solve-efm', self.b1lq,
                                        '--budget', '1')
        self.assertEqual(status, lqmatch.cli.EXIT_BUDGET)
        self.assertEqual(data['verdict'], 'budget_exceeded')

    def testThreadsFromEnvironment(self):
        with mock.patch.dict(os.environ, {lqmatch.cli.THREADS_ENV: '2'}):
            (status, data) = self._run_json('solve-efm', self.b1lq)
        self.assertEqual(status, lqmatch.cli.EXIT_OK)
        self.assertEqual(data['size'], 1)

    def testBadThreadsEnvironment(self):
        with mock.patch.dict(os.environ, {lqmatch.cli.THREADS_ENV: '0'}):
            (status, _, _) = self._run('solve-efm', self.b1lq)
        self.assertEqual(status, lqmatch.cli.EXIT_INPUT)

    def testUsage(self):
        with mock.patch('sys.stderr', new_callable=io.StringIO):
            self.assertEqual(self._run()[0], lqmatch.cli.EXIT_INPUT)
            self.assertEqual(self._run('nope')[0], lqmatch.cli.EXIT_INPUT)
            self.assertEqual(self._run('oracle', self.base)[0],
                             lqmatch.cli.EXIT_INPUT)
            self.assertEqual(self._run('solve-efm', self.base,
                                       '--threads', '0')[0],
                             lqmatch.cli.EXIT_INPUT)

    def testMissingFile(self):
        (status, _, err) = self._run('params',
                                     os.path.join(self.tmpdir, 'missing'))
        self.assertEqual(status, lqmatch.cli.EXIT_INPUT)
        self.assertTrue(err.startswith('lqmatch: '))

    def testBadInstance(self):
        path = self._file('broken.lq', broken_text)
        (status, data) = self._run_json('params', path)
        self.assertEqual(status, lqmatch.cli.EXIT_INPUT)
        self.assertEqual(data['verdict'], 'error')

    def testCheck(self):
        matching = self._file('m.txt', 'a1 b2\n')
        (status, data) = self._run_json('check', self.base,
                                        '--matching', matching)
        self.assertEqual(status, lqmatch.cli.EXIT_OK)
        self.assertEqual(data['properties'], {'feasible': True,
                                              'stable': False,
                                              'envy_free': True,
                                              'relaxed_stable': False})
        self.assertEqual(data['violations']['envy_pairs'], [])

    def testCheckText(self):
        matching = self._file('m.txt', 'a1 b2\n')
        (status, out, _) = self._run('check', self.base,
                                     '--matching', matching)
        self.assertEqual(status, lqmatch.cli.EXIT_OK)
        self.assertTrue('envy_free: yes' in out.splitlines())
        self.assertTrue('blocking: a2 b1' in out.splitlines())

    def testCheckMissingMatching(self):
        with mock.patch('sys.stderr', new_callable=io.StringIO):
            (status, _, _) = self._run('check', self.base)
        self.assertEqual(status, lqmatch.cli.EXIT_INPUT)

    def testCheckInvalidMatching(self):
        matching = self._file('m.txt', 'a2 b2\n')
        (status, _, _) = self._run('check', self.base, '--matching', matching)
        self.assertEqual(status, lqmatch.cli.EXIT_INPUT)

    def testCheckUnknownAgent(self):
        matching = self._file('m.txt', 'zz b1\n')
        (status, _, err) = self._run('check', self.base,
                                     '--matching', matching)
        self.assertEqual(status, lqmatch.cli.EXIT_INPUT)
        self.assertTrue(err.startswith('lqmatch: (zz, b1)'))
        (status, data) = self._run_json('check', self.base,
                                        '--matching', matching)
        self.assertEqual(status, lqmatch.cli.EXIT_INPUT)
        self.assertEqual(data['verdict'], 'error')

    def testKernelEfm(self):
        out = os.path.join(self.tmpdir, 'kernel.lq')
        marks = os.path.join(self.tmpdir, 'marks.txt')
        (status, data) = self._run_json('kernel-efm', self.base, '--k', '1',
                                        '--out', out, '--marks', marks)
        self.assertEqual(status, lqmatch.cli.EXIT_OK)
        self.assertEqual(data['verdict'], 'kernel')
        self.assertEqual(data['edges'], 3)
        with open(out, encoding='utf-8') as f:
            self.assertEqual(lqmatch.instance.from_file(f),
                             lqmatch.gen.gen_fig1())
        with open(marks, encoding='utf-8') as f:
            lines = f.read().splitlines()
        self.assertEqual(len(lines), 3)
        self.assertEqual([line.split()[:2] for line in lines],
                         [[a, b] for (a, b, _) in data['marks']])

    def testKernelEfmWithoutMarks(self):
        out = os.path.join(self.tmpdir, 'kernel.lq')
        (status, text, _) = self._run('kernel-efm', self.base, '--out', out)
        self.assertEqual(status, lqmatch.cli.EXIT_OK)
        self.assertTrue('out: %s' % out in text.splitlines())
        self.assertTrue(os.path.exists(out))

    def testKernelMissingOut(self):
        with mock.patch('sys.stderr', new_callable=io.StringIO):
            self.assertEqual(self._run('kernel-efm', self.base)[0],
                             lqmatch.cli.EXIT_INPUT)
            self.assertEqual(self._run('kernel-rsm', self.b1lq,
                                       '--k', '1')[0],
                             lqmatch.cli.EXIT_INPUT)

    def testKernelEfmNo(self):
        out = os.path.join(self.tmpdir, 'kernel.lq')
        (status, data) = self._run_json('kernel-efm', self.base, '--k', '2',
                                        '--out', out)
        self.assertEqual(status, lqmatch.cli.EXIT_NONE)
        self.assertEqual(data['verdict'], 'no')
        self.assertFalse(os.path.exists(out))

    def testKernelRsm(self):
        out = os.path.join(self.tmpdir, 'kernel.lq')
        (status, data) = self._run_json('kernel-rsm', self.b1lq, '--k', '1',
                                        '--out', out)
        self.assertEqual(status, lqmatch.cli.EXIT_OK)
        self.assertEqual(data['verdict'], 'yes')
        self.assertEqual(data['matching'], [['a1', 'b1']])
        self.assertFalse(os.path.exists(out))

    def testKernelRsmWritesKernel(self):
        out = os.path.join(self.tmpdir, 'kernel.lq')
        marks = os.path.join(self.tmpdir, 'marks.txt')
        (status, data) = self._run_json('kernel-rsm', self.b1lq, '--k', '2',
                                        '--out', out, '--marks', marks)
        self.assertEqual(status, lqmatch.cli.EXIT_OK)
        self.assertEqual(data['verdict'], 'kernel')
        with open(out, encoding='utf-8') as f:
            self.assertEqual(lqmatch.instance.to_text(
                lqmatch.instance.from_file(f)), data['kernel'])
        with open(marks, encoding='utf-8') as f:
            self.assertEqual(len(f.read().splitlines()), data['edges'])

    def testKernelRsmStableInfeasible(self):
        out = os.path.join(self.tmpdir, 'kernel.lq')
        (status, _, _) = self._run('kernel-rsm', self.base, '--k', '1',
                                   '--out', out)
        self.assertEqual(status, lqmatch.cli.EXIT_INPUT)

    def testExtend(self):
        matching = self._file('m.txt', 'a1 b2\n')
        (status, data) = self._run_json('extend', self.base,
                                        '--matching', matching)
        self.assertEqual(status, lqmatch.cli.EXIT_OK)
        self.assertEqual(data['verdict'], 'envy_free')
        self.assertEqual(data['matching'], [['a1', 'b2']])

    def testOracle(self):
        (status, data) = self._run_json('oracle', self.bothlq, '--rsm')
        self.assertEqual(status, lqmatch.cli.EXIT_OK)
        self.assertEqual(data['size'], 2)
        (status, data) = self._run_json('oracle', self.bothlq, '--efm')
        self.assertEqual(status, lqmatch.cli.EXIT_NONE)

    def testGenFig1(self):
        (status, out, _) = self._run('gen', 'fig1', '--variant', 'bothlq')
        self.assertEqual(status, lqmatch.cli.EXIT_OK)
        self.assertEqual(lqmatch.instance.from_text(out),
                         lqmatch.gen.gen_fig1(lqmatch.gen.BOTHLQ))

    def testGenRandom(self):
        argv = ('gen', 'random', '--agents', '4', '--resources', '3',
                '--lq', '1', '--maxlen', '2', '--seed', '5')
        (status, out, _) = self._run(*argv)
        self.assertEqual(status, lqmatch.cli.EXIT_OK)
        self.assertEqual(out, self._run(*argv)[1])
        self.assertEqual(lqmatch.instance.from_text(out),
                         lqmatch.gen.gen_random(4, 3, 1, 2, seed=5))

    def testGenIndset(self):
        graph = self._file('g.txt', '3 3\n1 2\n2 3\n1 3\n')
        (status, out, _) = self._run('gen', 'indset', graph, '--k', '1')
        self.assertEqual(status, lqmatch.cli.EXIT_OK)
        inst = lqmatch.instance.from_text(out)
        self.assertEqual(len(inst.agents), 6)
        self.assertEqual(len(inst.resources), 10)

    def testClone(self):
        (status, data) = self._run_json('clone', self.hospital)
        self.assertEqual(status, lqmatch.cli.EXIT_OK)
        inst = lqmatch.instance.from_text(data['instance'])
        self.assertEqual(inst.resources, ('h(1)', 'h(2)', 'k'))
        self.assertTrue(inst.is_one_one())


if __name__ == '__main__':
    unittest.main()
