# Copyright (C) lqmatch contributors, see LICENSE for text of ISC license

"""Fixed-parameter algorithms for maximum envy-free and maximum relaxed
stable matchings in ONE-ONE-LQ instances.

Both solvers enumerate every injective assignment of one listed agent to
each LQ resource, extend each surviving assignment with a stable matching
of the remaining graph, and keep the largest candidate that passes the
optimality check.
"""

from concurrent.futures import ThreadPoolExecutor
import logging
import math

import lqmatch.classic
import lqmatch.exception
import lqmatch.instance
import lqmatch.matching
import lqmatch.optimality

logger = logging.getLogger(__name__)

#: Threshold rank of a resource whose threshold agent is the dummy agent
#: placed after the end of its list.
DUMMY = math.inf


class NotMinimalFeasible(lqmatch.exception.LQException):
    """The matching to extend is not minimal feasible."""


class BudgetExceeded(lqmatch.exception.LQException):
    """More assignments would be enumerated than the budget allows."""
    supp_kwargs = {'budget'}
    fmt = "more than {budget} assignments enumerated"


class ThresholdMap(object):

    """Threshold ranks of the resources left unmatched by a matching.

    ``rank(b)`` is the 1-based rank in *b*'s list of its threshold agent,
    or ``DUMMY`` when no matched agent prefers *b* to its partner.
    """

    def __init__(self, inst, ranks):
        self._inst = inst
        self._ranks = ranks

    def __len__(self):
        return len(self._ranks)

    def __iter__(self):
        return iter(self._ranks)

    def __contains__(self, b):
        return b in self._ranks

    def rank(self, b):
        return self._ranks[b]

    def agent(self, b):
        """Return the threshold agent of *b*, or ``None`` for the dummy."""
        r = self._ranks[b]
        if r is DUMMY:
            return None
        return self._inst.resource_prefs[b][r - 1]

    def admits(self, b, a):
        """Does *b* strictly prefer *a* to its threshold agent?"""
        return self._inst.resource_rank(b, a) < self._ranks[b]


def threshold_agents(inst, m):
    """Compute the threshold agent of every resource unmatched in *m*.

    The threshold agent of *b* is the most-preferred agent of *b*'s list
    that is matched in *m* and prefers *b* to its partner.

    Returns an ``lqmatch.fpt.ThresholdMap``.
    """

    ranks = {}
    for b in inst.resources:
        if m.occupancy(b) > 0:
            continue
        ranks[b] = DUMMY
        for (i, a) in enumerate(inst.resource_prefs[b]):
            current = m.partner(a)
            if current is not None and inst.agent_prefers(a, b, current):
                ranks[b] = i + 1
                break
    return ThresholdMap(inst, ranks)


def extension_graph(inst, m):
    """Return the sub-instance EXTEND solves on.

    It holds the edges ``(a, b)`` with *a* and *b* unmatched in *m* and
    *b* strictly preferring *a* to its threshold agent; every resource
    gets quotas ``[0,1]``.

    Returns an ``lqmatch.instance.Instance``.
    """

    thresholds = threshold_agents(inst, m)
    matched = m.matched_agents()
    edges = []
    for b in inst.resources:
        if b not in thresholds:
            continue
        for a in inst.resource_prefs[b]:
            if a not in matched and thresholds.admits(b, a):
                edges.append((a, b))
    sub = inst.subgraph(edges)
    return sub.subgraph(edges, quotas={b: (0, 1) for b in sub.resources})


def extend(inst, m):
    """Extend a minimal feasible matching by the agent-optimal stable
    matching of its extension graph.

    If the result is envy-free in *inst*, it is a maximum-size envy-free
    matching containing *m*.

    Raises ``lqmatch.fpt.NotMinimalFeasible``.

    Returns an ``lqmatch.matching.Matching``.
    """

    lqmatch.matching.validate(inst, m)
    if not lqmatch.optimality.is_minimal_feasible(inst, m):
        raise NotMinimalFeasible
    stable = lqmatch.classic.stable_agent_optimal(extension_graph(inst, m))
    return m.union(stable)


class LQAssignment(object):

    """An injective assignment of one listed agent to each LQ resource.

    pairs: a tuple of ``(resource, agent)`` tuples in resource index order.
    """

    __slots__ = ['pairs']

    def __init__(self, pairs):
        self.pairs = tuple(pairs)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __eq__(self, other):
        if not isinstance(other, LQAssignment):
            return False
        return self.pairs == other.pairs

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        return '<lqmatch.fpt.LQAssignment %s>' % \
            ', '.join('%s<-%s' % p for p in self.pairs)

    def as_dict(self):
        return dict(self.pairs)

    def to_matching(self):
        return lqmatch.matching.Matching((a, b) for (b, a) in self.pairs)


def enumerate_assignments(inst):
    """Generate every LQ assignment of *inst*.

    Assignments come in lexicographic order of (LQ resource index, agent
    rank).  Nothing is generated if some LQ resource has an empty list;
    a single empty assignment is generated if there is no LQ resource.

    Raises ``lqmatch.exception.NotOneOne``.
    """

    inst.check_one_one()
    lq = inst.lq_resources()
    chosen = []
    used = set()

    def _extend(i):
        if i == len(lq):
            yield LQAssignment(chosen)
            return
        b = lq[i]
        for a in inst.resource_prefs[b]:
            if a in used:
                continue
            used.add(a)
            chosen.append((b, a))
            for assignment in _extend(i + 1):
                yield assignment
            chosen.pop()
            used.discard(a)

    return _extend(0)


def assignment_bound(inst):
    """Return min(ell_lq ** q, |A_bar|! / (|A_bar| - q)!).

    Both bound the number of LQ assignments of a ONE-ONE-LQ instance.
    """

    lq = inst.lq_resources()
    q = len(lq)
    ell_lq = max([len(inst.resource_prefs[b]) for b in lq] or [0])
    a_bar = len(set(a for b in lq for a in inst.resource_prefs[b]))
    if q > a_bar:
        return 0
    return min(ell_lq ** q, math.factorial(a_bar) // math.factorial(a_bar - q))


class Solution(object):

    """The outcome of a solver run.

    matching: the best ``Matching`` found, or ``None``.
    assignments: the number of LQ assignments enumerated.
    bound: ``assignment_bound()`` of the instance that was solved.
    """

    def __init__(self, matching, assignments, bound=None):
        self.matching = matching
        self.assignments = assignments
        self.bound = bound

    @property
    def size(self):
        if self.matching is None:
            return None
        return len(self.matching)

    def __bool__(self):
        return self.matching is not None

    def __repr__(self):
        return '<lqmatch.fpt.Solution size=%s assignments=%d>' % \
            (self.size, self.assignments)


class _Counter(object):

    """Pass assignments through, counting them against a budget."""

    def __init__(self, assignments, budget):
        self.assignments = assignments
        self.budget = budget
        self.count = 0

    def __iter__(self):
        for assignment in self.assignments:
            self.count += 1
            if self.budget is not None and self.count > self.budget:
                raise BudgetExceeded(budget=self.budget)
            yield assignment


def _best(inst, candidates):
    # Largest size first, then the smallest sorted edge-index list; the
    # key makes the choice independent of evaluation order.
    best = None
    best_key = None
    for candidate in candidates:
        if candidate is None:
            continue
        key = (-len(candidate),
               [inst.edge_key(e) for e in candidate.sorted_edges(inst)])
        if best is None or key < best_key:
            best = candidate
            best_key = key
    return best


def _run(inst, evaluate, threads, budget):
    counter = _Counter(enumerate_assignments(inst), budget)
    if threads is None or threads <= 1:
        candidates = [evaluate(assignment) for assignment in counter]
    else:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            candidates = list(executor.map(evaluate, counter))
    best = _best(inst, candidates)
    logger.debug('%d assignments enumerated, %d candidates survived',
                 counter.count, sum(1 for c in candidates if c is not None))
    return Solution(best, counter.count, assignment_bound(inst))


def alg_efm(inst, threads=1, budget=None):
    """Compute a maximum feasible envy-free matching of *inst*.

    An assignment is discarded when an agent matched by it envies another
    matched agent; otherwise it is extended by ``extend()`` and the
    extension is discarded unless envy-free in *inst*.

    *threads*, an ``int``, the number of worker threads; 1 runs in the
    calling thread.

    *budget*, an ``int`` or ``None``, the largest number of assignments
    that may be enumerated.

    Raises ``lqmatch.exception.NotOneOne`` and
    ``lqmatch.fpt.BudgetExceeded``.

    Returns an ``lqmatch.fpt.Solution`` whose matching is ``None`` when
    no feasible envy-free matching exists.
    """

    inst.check_one_one()

    def evaluate(assignment):
        m_e = assignment.to_matching()
        matched = m_e.matched_agents()
        for (a, _) in lqmatch.optimality.envy_pairs(inst, m_e):
            if a in matched:
                return None
        extended = extend(inst, m_e)
        if not lqmatch.optimality.is_envy_free(inst, extended):
            return None
        return extended

    return _run(inst, evaluate, threads, budget)


def alg_rsm(inst, threads=1, budget=None):
    """Compute a maximum feasible relaxed stable matching of *inst*.

    Each assignment is completed by the agent-optimal stable matching of
    the instance left after removing the agents and resources it
    matches; the union is discarded unless relaxed stable in *inst*.

    Raises ``lqmatch.exception.NotOneOne``,
    ``lqmatch.exception.NoFeasibleMatching`` and
    ``lqmatch.fpt.BudgetExceeded``.

    Returns an ``lqmatch.fpt.Solution``.
    """

    inst.check_one_one()
    if not lqmatch.optimality.feasibility_exists(inst):
        raise lqmatch.exception.NoFeasibleMatching

    def evaluate(assignment):
        m_e = assignment.to_matching()
        agents = m_e.matched_agents()
        resources = m_e.matched_resources()
        rest = inst.subgraph((a, b) for (a, b) in inst.edges()
                             if a not in agents and b not in resources)
        candidate = m_e.union(lqmatch.classic.stable_agent_optimal(rest))
        if not lqmatch.optimality.is_relaxed_stable(inst, candidate):
            return None
        return candidate

    return _run(inst, evaluate, threads, budget)


def solve_cloned(inst, solver, **kwargs):
    """Run *solver* on the ONE-ONE-LQ clone of *inst* and map the result
    back to the resources of *inst*.

    *solver*, ``alg_efm`` or ``alg_rsm``; *kwargs* are passed through.

    Returns an ``lqmatch.fpt.Solution``.
    """

    (cloned, clone_map) = lqmatch.instance.clone_to_one_one(inst)
    solution = solver(cloned, **kwargs)
    if solution.matching is not None:
        solution.matching = lqmatch.instance.unclone_matching(
            clone_map, solution.matching)
    return solution
