# Copyright (C) lqmatch contributors, see LICENSE for text of ISC license

"""Kernelization for maximum envy-free and maximum relaxed stable matchings.

Both kernels start from the agent-optimal stable matching M_s and the
vertex cover X it induces (X_A its matched agents, X_B its matched
resources), mark a bounded number of edges around X, and keep the
subgraph spanned by the marked edges.
"""

from collections import deque
import logging

import lqmatch.classic
import lqmatch.exception
import lqmatch.matching
import lqmatch.optimality

logger = logging.getLogger(__name__)

#: Verdict: the instance is trivially a yes-instance; a witness is known
TRIVIAL_YES = 'yes'
#: Verdict: the instance is trivially a no-instance
TRIVIAL_NO = 'no'
#: Verdict: a reduced instance was built
KERNEL = 'kernel'

#: EFM marking steps
STEP1 = 'step1'
STEP2 = 'step2'
STEP3 = 'step3'
STEP4 = 'step4'

#: RSM marking sides
AGENT_SIDE = 'agent'
RESOURCE_SIDE = 'resource'


class StableInfeasible(lqmatch.exception.LQException):
    """The stable matching is infeasible; the relaxed stable kernel
    requires a feasible one."""


class KernelResult(object):

    """The outcome of a kernelization.

    verdict: one of ``TRIVIAL_YES``, ``TRIVIAL_NO`` or ``KERNEL``.
    witness: for ``TRIVIAL_YES``, a matching proving the answer.
    reason: for ``TRIVIAL_NO``, a ``str`` explaining the answer.
    reduced: for ``KERNEL``, the reduced ``Instance``.
    marks: for ``KERNEL``, a ``dict`` mapping each kept edge to the step
    (or side) that first marked it.
    stable: the agent-optimal stable matching M_s.
    cover: an ``(X_A, X_B)`` tuple of frozensets.
    """

    def __init__(self, verdict, stable, witness=None, reason=None,
                 reduced=None, marks=None, cover=None):
        self.verdict = verdict
        self.stable = stable
        self.witness = witness
        self.reason = reason
        self.reduced = reduced
        self.marks = marks
        self.cover = cover

    def is_kernel(self):
        return self.verdict == KERNEL

    def marked_by(self, step):
        """Return the kept edges first marked by *step*."""
        return frozenset(e for (e, s) in self.marks.items() if s == step)

    def __repr__(self):
        if self.verdict == KERNEL:
            return '<lqmatch.kernel.KernelResult kernel, %d edges>' % \
                len(self.marks)
        return '<lqmatch.kernel.KernelResult %s>' % self.verdict


def efm_edge_bound(s, t):
    """The edge bound s(s + (s-1)t + 1) + s(s + 1) of the envy-free kernel.

    It holds whenever q <= s, which every instance admitting a feasible
    envy-free matching satisfies.
    """

    return s * (s + (s - 1) * t + 1) + s * (s + 1)


def _cover(stable):
    return (stable.matched_agents(), stable.matched_resources())


def _mark(marks, edge, step):
    if edge not in marks:
        marks[edge] = step


def efm_kernelize(inst, k=None):
    """Kernelize *inst* for the maximum feasible envy-free matching problem.

    *k*, an ``int`` or ``None``, the target size.  Without it no
    ``TRIVIAL_NO`` verdict is produced.

    Raises ``lqmatch.exception.NotOneOne`` and
    ``lqmatch.exception.NoFeasibleMatching``.

    Returns an ``lqmatch.kernel.KernelResult``.
    """

    inst.check_one_one()
    if not lqmatch.optimality.feasibility_exists(inst):
        raise lqmatch.exception.NoFeasibleMatching
    stable = lqmatch.classic.stable_agent_optimal(inst)
    s = len(stable)
    if k is not None and s < k:
        logger.debug('efm kernel: stable size %d < k=%d', s, k)
        return KernelResult(TRIVIAL_NO, stable,
                            reason='stable matching has size %d < %d; no '
                            'envy-free matching is larger' % (s, k))
    if lqmatch.optimality.is_feasible(inst, stable):
        return KernelResult(TRIVIAL_YES, stable, witness=stable)
    (x_a, x_b) = _cover(stable)
    agents = [a for a in inst.agents if a in x_a]
    resources = [b for b in inst.resources if b in x_b]
    marks = {}
    for a in agents:
        for b in inst.agent_prefs[a]:
            if inst.is_lq(b):
                _mark(marks, (a, b), STEP1)
    for b in resources:
        prefs = inst.resource_prefs[b]
        for a in prefs[:min(s + 1, len(prefs))]:
            _mark(marks, (a, b), STEP2)
    for a in agents:
        for b in inst.agent_prefs[a]:
            if inst.is_lq(b):
                continue
            if any(other != a and other in x_a
                   for other in inst.resource_prefs[b]):
                _mark(marks, (a, b), STEP3)
    for a in agents:
        for b in inst.agent_prefs[a]:
            if (a, b) not in marks:
                marks[(a, b)] = STEP4
                break
    reduced = inst.subgraph(marks)
    logger.debug('efm kernel: s=%d, %d of %d edges kept', s, len(marks),
                 inst.num_edges())
    return KernelResult(KERNEL, stable, reduced=reduced, marks=marks,
                        cover=(x_a, x_b))


def _require_kernel(kr):
    if kr.verdict != KERNEL:
        raise lqmatch.exception.PreconditionViolated(
            'a kernel verdict is required, got %s' % kr.verdict)


def efm_project(original, kr, m):
    """Move a feasible envy-free matching of *original* into the kernel.

    Each edge ``(a, b)`` of *m* missing from the kernel is replaced by
    ``(a, b2)``, where *b2* is the resource marked for *a* in step 4;
    *a* prefers *b2* to *b* and *b2* is free in *m*.

    Raises ``lqmatch.exception.PreconditionViolated`` unless *m* is
    feasible and envy-free in *original* and *kr* is a kernel.

    Returns an ``lqmatch.matching.Matching`` of the same size.
    """

    _require_kernel(kr)
    if not (lqmatch.optimality.is_feasible(original, m) and
            lqmatch.optimality.is_envy_free(original, m)):
        raise lqmatch.exception.PreconditionViolated(
            'the matching must be feasible and envy-free')
    extra = {a: b for (a, b) in kr.marked_by(STEP4)}
    projected = m
    for (a, b) in original.sort_edges(m.edges):
        if (a, b) in kr.marks:
            continue
        replacement = extra.get(a)
        if replacement is None or \
           projected.occupancy(replacement) > 0 or \
           not original.agent_prefers(a, replacement, b):
            raise lqmatch.exception.PreconditionViolated(
                'no free step-4 resource for %s' % a)
        projected = projected.replace((a, b), (a, replacement))
    return projected


def efm_lift(original, kr, m):
    """Turn a feasible envy-free matching of the kernel into one of
    *original* of the same size.

    Agents that envy under *m* in *original* propose down their full
    lists.  A matched resource accepts a proposer it prefers to its
    assignee, whose displaced agent then proposes from the top of its own
    list; free resources never accept, so the set of matched resources
    and thus size and feasibility are unchanged.

    Raises ``lqmatch.exception.PreconditionViolated`` unless *m* is
    feasible and envy-free in the kernel.

    Returns an ``lqmatch.matching.Matching``.
    """

    _require_kernel(kr)
    reduced = kr.reduced
    try:
        ok = lqmatch.optimality.is_feasible(reduced, m) and \
            lqmatch.optimality.is_envy_free(reduced, m)
    except lqmatch.matching.BadMatching as detail:
        raise lqmatch.exception.PreconditionViolated(str(detail))
    if not ok:
        raise lqmatch.exception.PreconditionViolated(
            'the matching must be feasible and envy-free in the kernel')
    enviers = []
    for (a, _) in lqmatch.optimality.envy_pairs(original, m):
        if a not in enviers:
            enviers.append(a)
    partner = {a: b for (a, b) in m}
    holder = {b: a for (a, b) in m}
    next_choice = {a: 0 for a in enviers}
    queue = deque(a for a in enviers if a not in partner)
    proposals = 0
    while queue:
        a = queue.popleft()
        prefs = original.agent_prefs[a]
        while next_choice[a] < len(prefs):
            b = prefs[next_choice[a]]
            next_choice[a] += 1
            proposals += 1
            current = holder.get(b)
            if current is None or \
               not original.resource_prefers(b, a, current):
                continue
            del partner[current]
            holder[b] = a
            partner[a] = b
            if current not in next_choice:
                next_choice[current] = 0
            queue.append(current)
            break
    logger.debug('efm lift: %d enviers, %d proposals', len(enviers),
                 proposals)
    return lqmatch.matching.Matching(partner.items())


def rsm_kernelize(inst, k):
    """Kernelize *inst* for the maximum feasible relaxed stable matching
    problem.

    *k*, an ``int``, the target size.

    Raises ``lqmatch.exception.NotOneOne`` and
    ``lqmatch.kernel.StableInfeasible``.

    Returns an ``lqmatch.kernel.KernelResult``.
    """

    inst.check_one_one()
    stable = lqmatch.classic.stable_agent_optimal(inst)
    if not lqmatch.optimality.is_feasible(inst, stable):
        raise StableInfeasible
    s = len(stable)
    if k <= s:
        return KernelResult(TRIVIAL_YES, stable, witness=stable)
    if k > 2 * s:
        return KernelResult(TRIVIAL_NO, stable,
                            reason='relaxed stable matchings have size at '
                            'most 2s = %d < %d' % (2 * s, k))
    (x_a, x_b) = _cover(stable)
    marks = {}
    for a in inst.agents:
        if a in x_a:
            prefs = inst.agent_prefs[a]
            for b in prefs[:min(2 * s + 1, len(prefs))]:
                _mark(marks, (a, b), AGENT_SIDE)
    for b in inst.resources:
        if b in x_b:
            prefs = inst.resource_prefs[b]
            for a in prefs[:min(2 * s + 1, len(prefs))]:
                _mark(marks, (a, b), RESOURCE_SIDE)
    reduced = inst.subgraph(marks)
    logger.debug('rsm kernel: s=%d, %d of %d edges kept', s, len(marks),
                 inst.num_edges())
    return KernelResult(KERNEL, stable, reduced=reduced, marks=marks,
                        cover=(x_a, x_b))


def marks_to_text(inst, kr):
    """Render kernel marks as ``<agent> <resource> <step>`` lines."""
    return ''.join('%s %s %s\n' % (a, b, kr.marks[(a, b)])
                   for (a, b) in inst.sort_edges(kr.marks))
