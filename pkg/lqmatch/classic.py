# Copyright (C) lqmatch contributors, see LICENSE for text of ISC license

"""Gale-Shapley stable matchings and deficiency.

Lower quotas are ignored when computing stable matchings; upper quotas
are respected, so MANY-ONE instances are handled directly.
"""

from collections import deque
import logging

import lqmatch.matching

logger = logging.getLogger(__name__)


def stable_agent_optimal(inst):
    """Compute the agent-optimal stable matching of *inst*.

    Agents propose in index order from a FIFO queue of free agents; a
    full resource keeps the proposer only if it prefers the proposer to
    its worst assignee.

    Returns an ``lqmatch.matching.Matching``.
    """

    next_choice = {a: 0 for a in inst.agents}
    seats = {b: [] for b in inst.resources}
    partner = {}
    free = deque(inst.agents)
    proposals = 0
    while free:
        a = free.popleft()
        prefs = inst.agent_prefs[a]
        while next_choice[a] < len(prefs):
            b = prefs[next_choice[a]]
            next_choice[a] += 1
            proposals += 1
            held = seats[b]
            if len(held) < inst.upper(b):
                held.append(a)
                partner[a] = b
                break
            worst = inst.worst_assigned(b, held)
            if inst.resource_prefers(b, a, worst):
                held.remove(worst)
                del partner[worst]
                free.append(worst)
                held.append(a)
                partner[a] = b
                break
    logger.debug('agent-proposing run: %d proposals, %d matched',
                 proposals, len(partner))
    return lqmatch.matching.Matching(partner.items())


def stable_resource_optimal(inst):
    """Compute the resource-optimal stable matching of *inst*.

    Resources propose in index order from a FIFO queue, each filling up
    to its upper quota; an agent keeps the best proposal it has seen.

    Returns an ``lqmatch.matching.Matching``.
    """

    next_choice = {b: 0 for b in inst.resources}
    count = {b: 0 for b in inst.resources}
    holding = {a: None for a in inst.agents}
    free = deque(inst.resources)
    proposals = 0
    while free:
        b = free.popleft()
        prefs = inst.resource_prefs[b]
        while count[b] < inst.upper(b) and next_choice[b] < len(prefs):
            a = prefs[next_choice[b]]
            next_choice[b] += 1
            proposals += 1
            current = holding[a]
            if inst.agent_prefers(a, b, current):
                holding[a] = b
                count[b] += 1
                if current is not None:
                    count[current] -= 1
                    free.append(current)
    logger.debug('resource-proposing run: %d proposals', proposals)
    return lqmatch.matching.Matching((a, b) for (a, b) in holding.items()
                                     if b is not None)


def deficiency(inst, stable=None):
    """Compute the deficiency of *inst*.

    *stable*, an ``lqmatch.matching.Matching`` or ``None``.  The
    agent-optimal stable matching is computed when it is not supplied.

    A resource is deficient if it holds fewer agents than its lower
    quota.  *d* is the total shortfall, which in a ONE-ONE-LQ instance
    equals the number of deficient resources *n_d*.

    Returns a ``(d, n_d, frozenset)`` tuple; the set holds the deficient
    resources.
    """

    if stable is None:
        stable = stable_agent_optimal(inst)
    d = 0
    deficient = []
    for b in inst.resources:
        shortfall = inst.lower(b) - stable.occupancy(b)
        if shortfall > 0:
            d += shortfall
            deficient.append(b)
    return (d, len(deficient), frozenset(deficient))
