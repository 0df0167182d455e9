# Copyright (C) lqmatch contributors, see LICENSE for text of ISC license

import unittest

import networkx

import lqmatch.classic
import lqmatch.gen
import lqmatch.instance
import lqmatch.matching
import lqmatch.optimality
import lqmatch.oracle

Matching = lqmatch.matching.Matching

empty_lq_text = """@lqmatch v1
agent a1: b1
resource b1 [0,1]: a1
resource b2 [1,1]:
"""

hospital_text = """@lqmatch v1
agent r1: h k
agent r2: h
agent r3: k h
resource h [1,2]: r1 r2 r3
resource k [0,1]: r3 r1
"""


def _relabel(inst):
    """Reverse the index order of both sides and rename every vertex."""
    agent_names = {a: 'x%s' % a for a in inst.agents}
    resource_names = {b: 'y%s' % b for b in inst.resources}
    return lqmatch.instance.Instance(
        [agent_names[a] for a in reversed(inst.agents)],
        [resource_names[b] for b in reversed(inst.resources)],
        {resource_names[b]: q for (b, q) in inst.quotas.items()},
        {agent_names[a]: [resource_names[b] for b in p]
         for (a, p) in inst.agent_prefs.items()},
        {resource_names[b]: [agent_names[a] for a in p]
         for (b, p) in inst.resource_prefs.items()})


class EfmOracleTestCase(unittest.TestCase):

    def testFig1Base(self):
        best = lqmatch.oracle.max_efm_bruteforce(lqmatch.gen.gen_fig1())
        self.assertEqual(best, Matching([('a1', 'b2')]))

    def testFig1BothLQ(self):
        inst = lqmatch.gen.gen_fig1(lqmatch.gen.BOTHLQ)
        self.assertEqual(lqmatch.oracle.max_efm_bruteforce(inst), None)

    def testNoLowerQuotas(self):
        for seed in range(40):
            inst = lqmatch.gen.gen_random(6, 6, 0, 3, seed=seed)
            best = lqmatch.oracle.max_efm_bruteforce(inst)
            stable = lqmatch.classic.stable_agent_optimal(inst)
            self.assertEqual(len(best), len(stable))

    def testCap(self):
        inst = lqmatch.gen.gen_random(9, 9, 0, 2, seed=1)
        self.assertRaises(lqmatch.oracle.CapExceeded,
                          lambda: lqmatch.oracle.max_efm_bruteforce(inst))
        self.assertTrue(lqmatch.oracle.max_efm_bruteforce(inst, cap=None)
                        is not None)

    def testStopAt(self):
        inst = lqmatch.gen.gen_fig1()
        best = lqmatch.oracle.max_efm_bruteforce(inst, stop_at=1)
        self.assertEqual(len(best), 1)

    def testMinSize(self):
        inst = lqmatch.gen.gen_fig1()
        self.assertEqual(lqmatch.oracle.max_efm_bruteforce(inst, min_size=2),
                         None)
        self.assertEqual(lqmatch.oracle.max_efm_bruteforce(inst, min_size=1),
                         Matching([('a1', 'b2')]))

    def testOutputsQualify(self):
        for seed in range(60):
            inst = lqmatch.gen.gen_random(6, 5, 2, 3, seed=seed)
            best = lqmatch.oracle.max_efm_bruteforce(inst)
            if best is None:
                continue
            self.assertTrue(lqmatch.optimality.is_feasible(inst, best))
            self.assertTrue(lqmatch.optimality.is_envy_free(inst, best))

    def testRelabeling(self):
        for seed in range(40):
            inst = lqmatch.gen.gen_random(5, 5, 2, 3, seed=seed)
            best = lqmatch.oracle.max_efm_bruteforce(inst)
            other = lqmatch.oracle.max_efm_bruteforce(_relabel(inst))
            self.assertEqual(best is None, other is None)
            if best is not None:
                self.assertEqual(len(best), len(other))

    def testManyOne(self):
        inst = lqmatch.instance.from_text(hospital_text)
        best = lqmatch.oracle.max_efm_bruteforce(inst)
        self.assertTrue(lqmatch.optimality.is_envy_free(inst, best))
        self.assertTrue(lqmatch.optimality.is_feasible(inst, best))


class RsmOracleTestCase(unittest.TestCase):

    def testFig1BothLQ(self):
        inst = lqmatch.gen.gen_fig1(lqmatch.gen.BOTHLQ)
        best = lqmatch.oracle.max_rsm_bruteforce(inst)
        self.assertEqual(best, Matching([('a1', 'b2'), ('a2', 'b1')]))

    def testInfeasible(self):
        inst = lqmatch.instance.from_text(empty_lq_text)
        self.assertEqual(lqmatch.oracle.max_rsm_bruteforce(inst), None)

    def testAtMostTwiceStable(self):
        for seed in range(60):
            inst = lqmatch.gen.gen_random(6, 6, 2, 3, seed=seed)
            best = lqmatch.oracle.max_rsm_bruteforce(inst)
            s = len(lqmatch.classic.stable_agent_optimal(inst))
            self.assertTrue(len(best) <= 2 * s)
            self.assertTrue(lqmatch.optimality.is_feasible(inst, best))
            self.assertTrue(lqmatch.optimality.is_relaxed_stable(inst, best))

    def testRelabeling(self):
        for seed in range(40):
            inst = lqmatch.gen.gen_random(5, 5, 2, 3, seed=seed)
            best = lqmatch.oracle.max_rsm_bruteforce(inst)
            other = lqmatch.oracle.max_rsm_bruteforce(_relabel(inst))
            self.assertEqual(len(best), len(other))

    def testManyOne(self):
        inst = lqmatch.instance.from_text(hospital_text)
        best = lqmatch.oracle.max_rsm_bruteforce(inst)
        self.assertEqual(len(best), 3)
        self.assertTrue(lqmatch.optimality.is_relaxed_stable(inst, best))


class IndependentSetTestCase(unittest.TestCase):

    def testTriangle(self):
        g = lqmatch.gen.SimpleGraph(3, [(1, 2), (2, 3), (1, 3)])
        self.assertEqual(lqmatch.oracle.max_independent_set_bruteforce(g, 1),
                         (1,))
        self.assertEqual(lqmatch.oracle.max_independent_set_bruteforce(g, 2),
                         None)

    def testFourCycle(self):
        g = lqmatch.gen.SimpleGraph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
        self.assertEqual(lqmatch.oracle.max_independent_set_bruteforce(g, 2),
                         (1, 3))

    def testOutOfRange(self):
        g = lqmatch.gen.SimpleGraph(2, [])
        self.assertEqual(lqmatch.oracle.max_independent_set_bruteforce(g, 3),
                         None)
        self.assertEqual(lqmatch.oracle.max_independent_set_bruteforce(g, 0),
                         ())

    def testRandomGraphsMatchComplementCliques(self):
        for seed in range(20):
            g = lqmatch.gen.gen_random_graph(6, 0.5, seed=seed)
            complement = networkx.complement(g.to_networkx())
            alpha = max(len(c) for c in networkx.find_cliques(complement))
            found = lqmatch.oracle.max_independent_set_bruteforce(g, alpha)
            self.assertEqual(len(found), alpha)
            self.assertTrue(g.is_independent(found))
            self.assertEqual(
                lqmatch.oracle.max_independent_set_bruteforce(g, alpha + 1),
                None)


if __name__ == '__main__':
    unittest.main()
