# Copyright (C) lqmatch contributors, see LICENSE for text of ISC license

"""Feasibility, stability, envy-freeness and relaxed stability checks.

Being unmatched is the least-preferred choice of every vertex.  Pair
lists are returned sorted by index order of the instance.
"""

import networkx

import lqmatch.matching


def blocking_pairs(inst, m):
    """Return the blocking pairs of *m*.

    A pair ``(a, b)`` of the instance not in *m* blocks when *a* prefers
    *b* to its partner and *b* either has a free seat or prefers *a* to
    its worst assignee.

    Raises ``lqmatch.matching.BadMatching`` if *m* is not a matching of
    *inst*.

    Returns a ``list`` of ``(agent, resource)`` tuples.
    """

    lqmatch.matching.validate(inst, m)
    pairs = []
    for (a, b) in inst.edges():
        current = m.partner(a)
        if current == b or not inst.agent_prefers(a, b, current):
            continue
        held = m.assigned(b)
        if len(held) < inst.upper(b) or \
           inst.resource_prefers(b, a, inst.worst_assigned(b, held)):
            pairs.append((a, b))
    return pairs


def blocking_agents(inst, m):
    """Return the ``frozenset`` of agents taking part in a blocking pair.
    """

    return frozenset(a for (a, _) in blocking_pairs(inst, m))


def envy_pairs(inst, m):
    """Return the envy pairs of *m*.

    ``(a, a2)`` is an envy pair when *a2* is matched to *b*, *a* and *b*
    are mutually acceptable, *a* prefers *b* to its partner and *b*
    prefers *a* to *a2*.

    Raises ``lqmatch.matching.BadMatching`` if *m* is not a matching of
    *inst*.

    Returns a ``list`` of ``(envier, envied)`` agent tuples.
    """

    lqmatch.matching.validate(inst, m)
    pairs = []
    for (envied, b) in m:
        envied_rank = inst.resource_rank(b, envied)
        for a in inst.resource_prefs[b][:envied_rank - 1]:
            if inst.agent_prefers(a, b, m.partner(a)):
                pairs.append((a, envied))
    pairs.sort(key=lambda p: (inst.agent_index(p[0]), inst.agent_index(p[1])))
    return pairs


def is_feasible(inst, m):
    """Does every resource hold at least its lower quota?"""
    return all(m.occupancy(b) >= inst.lower(b) for b in inst.resources)


def is_minimal_feasible(inst, m):
    """Is *m* feasible with every resource holding exactly its lower quota?

    Removing any edge of such a matching makes it infeasible.
    """

    return is_feasible(inst, m) and \
        all(m.occupancy(b) == inst.lower(b) for b in m.matched_resources())


def is_stable(inst, m):
    return not blocking_pairs(inst, m)


def is_envy_free(inst, m):
    return not envy_pairs(inst, m)


def is_relaxed_stable(inst, m):
    """Is *m* relaxed stable?

    No unmatched agent may take part in a blocking pair, and for every
    resource *b* at most ``lower(b)`` of its assignees may.  In a
    ONE-ONE-LQ instance this says every blocking agent is matched to an
    LQ resource.
    """

    blockers = blocking_agents(inst, m)
    for a in blockers:
        if m.partner(a) is None:
            return False
    for b in m.matched_resources():
        if len(m.assigned(b) & blockers) > inst.lower(b):
            return False
    return True


def feasibility_exists(inst):
    """Does *inst* admit a feasible matching?

    Every LQ resource is expanded into ``lower(b)`` demand slots and a
    maximum bipartite matching between slots and agents is computed; the
    instance is feasible iff it saturates every slot.
    """

    slots = [('slot', b, i) for b in inst.lq_resources()
             for i in range(inst.lower(b))]
    if not slots:
        return True
    graph = networkx.Graph()
    graph.add_nodes_from(slots, bipartite=0)
    graph.add_nodes_from((('agent', a) for a in inst.agents), bipartite=1)
    for slot in slots:
        for a in inst.resource_prefs[slot[1]]:
            graph.add_edge(slot, ('agent', a))
    matched = networkx.bipartite.maximum_matching(graph, top_nodes=slots)
    return all(slot in matched for slot in slots)
