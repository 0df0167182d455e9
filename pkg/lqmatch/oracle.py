# Copyright (C) lqmatch contributors, see LICENSE for text of ISC license

"""Exhaustive solvers for small instances.

These are exponential and exist to check the polynomial and
fixed-parameter algorithms against ground truth.
"""

import itertools
import logging

import lqmatch.exception
import lqmatch.matching
import lqmatch.optimality

logger = logging.getLogger(__name__)

#: default largest number of vertices (agents plus resources) searched
DEFAULT_CAP = 16


class CapExceeded(lqmatch.exception.LQException):
    """The instance is too large for an exhaustive search."""
    supp_kwargs = {'size', 'cap'}
    fmt = "instance has {size} vertices, more than the cap of {cap}"


class _Search(object):

    """Backtracking over agents in index order.

    Each agent tries its acceptable resources with a free seat in
    preference order, then staying unmatched.  Partial assignments are cut
    when the lower quotas can no longer be met or when the remaining
    agents cannot reach the best size found.  With *envy_free* set, two
    decided agents may not form an envy pair; with *relaxed* set, a
    resource whose listed agents are all decided may not block with an
    unmatched agent or with more assignees of a resource than its lower
    quota.
    """

    def __init__(self, inst, envy_free, relaxed, stop_at, min_size):
        self.inst = inst
        self.min_size = min_size or 0
        self.envy_free = envy_free
        self.relaxed = relaxed
        self.stop_at = stop_at
        self.agents = inst.agents
        self.partner = {}
        self.holders = {b: [] for b in inst.resources}
        self.blockers = set()
        self.size = 0
        self.best = None
        self.best_key = None
        self.leaves = 0
        # agents from position i onward acceptable to each LQ resource
        self.later = []
        for i in range(len(self.agents) + 1):
            rest = set(self.agents[i:])
            self.later.append({b: sum(1 for a in inst.resource_prefs[b]
                                      if a in rest)
                               for b in inst.lq_resources()})
        # resources whose last listed agent sits at position i
        self.closing = [[] for _ in self.agents]
        for b in inst.resources:
            listed = inst.resource_prefs[b]
            if listed:
                last = max(inst.agent_index(a) for a in listed)
                self.closing[last].append(b)

    def _envies(self, a, other):
        b = self.partner.get(other)
        if b is None or not self.inst.has_edge(a, b):
            return False
        return self.inst.agent_prefers(a, b, self.partner.get(a)) and \
            self.inst.resource_prefers(b, a, other)

    def _envy_free_with(self, a, i):
        for other in self.agents[:i]:
            if self._envies(a, other) or self._envies(other, a):
                return False
        return True

    def _blocks(self, a, b):
        if not self.inst.agent_prefers(a, b, self.partner.get(a)):
            return False
        held = self.holders[b]
        return len(held) < self.inst.upper(b) or \
            self.inst.resource_prefers(b, a,
                                       self.inst.worst_assigned(b, held))

    def _close(self, i, added):
        """Record the blockers of the resources closing at position *i*.

        New blockers are appended to *added*.  Returns ``False`` when
        relaxed stability is already violated.
        """

        for b in self.closing[i]:
            for a in self.inst.resource_prefs[b]:
                if a in self.blockers or not self._blocks(a, b):
                    continue
                self.blockers.add(a)
                added.append(a)
                r = self.partner.get(a)
                if r is None:
                    return False
                held = sum(1 for x in self.holders[r] if x in self.blockers)
                if held > self.inst.lower(r):
                    return False
        return True

    def _can_meet_quotas(self, i):
        later = self.later[i]
        for (b, count) in later.items():
            if len(self.holders[b]) + count < self.inst.lower(b):
                return False
        return True

    def _leaf(self):
        self.leaves += 1
        m = lqmatch.matching.Matching(self.partner.items())
        if not lqmatch.optimality.is_feasible(self.inst, m):
            return False
        if self.relaxed and \
           not lqmatch.optimality.is_relaxed_stable(self.inst, m):
            return False
        key = (-len(m),
               [self.inst.edge_key(e) for e in m.sorted_edges(self.inst)])
        if self.best is None or key < self.best_key:
            self.best = m
            self.best_key = key
        return self.stop_at is not None and len(m) >= self.stop_at

    def _options(self, a):
        for b in self.inst.agent_prefs[a]:
            if len(self.holders[b]) < self.inst.upper(b):
                yield b
        yield None

    def _admissible(self, a, i, added):
        if self.envy_free and not self._envy_free_with(a, i):
            return False
        if self.relaxed and not self._close(i, added):
            return False
        return self._can_meet_quotas(i + 1)

    def run(self, i=0):
        """Search from agent position *i*; return ``True`` to stop."""
        target = self.min_size
        if self.best is not None:
            target = max(target, len(self.best))
        if self.size + len(self.agents) - i < target:
            return False
        if i == len(self.agents):
            return self._leaf()
        a = self.agents[i]
        for b in self._options(a):
            if b is not None:
                self.partner[a] = b
                self.holders[b].append(a)
                self.size += 1
            added = []
            if self._admissible(a, i, added):
                stop = self.run(i + 1)
            else:
                stop = False
            self.blockers.difference_update(added)
            if b is not None:
                del self.partner[a]
                self.holders[b].pop()
                self.size -= 1
            if stop:
                return True
        return False


def _search(inst, envy_free, relaxed, cap, stop_at, min_size):
    size = len(inst.agents) + len(inst.resources)
    if cap is not None and size > cap:
        raise CapExceeded(size=size, cap=cap)
    search = _Search(inst, envy_free, relaxed, stop_at, min_size)
    search.run()
    logger.debug('exhaustive search: %d leaves, best size %s',
                 search.leaves,
                 None if search.best is None else len(search.best))
    return search.best


def max_efm_bruteforce(inst, cap=DEFAULT_CAP, stop_at=None,
                       min_size=None):
    """Find a maximum feasible envy-free matching by exhaustive search.

    *cap*, an ``int`` or ``None``, the largest number of vertices
    searched.

    *stop_at*, an ``int`` or ``None``; when set the search returns the
    first qualifying matching of at least this size.

    *min_size*, an ``int`` or ``None``; when set only matchings of at
    least this size are searched, and ``None`` is returned if there is
    none.

    Ties between maximum matchings go to the smallest sorted edge list.

    Raises ``lqmatch.oracle.CapExceeded``.

    Returns an ``lqmatch.matching.Matching`` or ``None``.
    """

    return _search(inst, True, False, cap, stop_at, min_size)


def max_rsm_bruteforce(inst, cap=DEFAULT_CAP, stop_at=None,
                       min_size=None):
    """Find a maximum feasible relaxed stable matching by exhaustive
    search.

    Raises ``lqmatch.oracle.CapExceeded``.

    Returns an ``lqmatch.matching.Matching`` or ``None``.
    """

    return _search(inst, False, True, cap, stop_at, min_size)


def max_independent_set_bruteforce(g, k):
    """Find an independent set of *k* vertices of the graph *g*.

    *g*, an ``lqmatch.gen.SimpleGraph``; vertices are ``1`` .. ``g.n``.

    Subsets are tried in lexicographic order.

    Returns a ``tuple`` of vertices or ``None``.
    """

    if k < 0 or k > g.n:
        return None
    graph = g.to_networkx()
    for subset in itertools.combinations(range(1, g.n + 1), k):
        if graph.subgraph(subset).number_of_edges() == 0:
            return subset
    return None
