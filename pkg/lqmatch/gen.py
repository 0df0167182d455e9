# Copyright (C) lqmatch contributors, see LICENSE for text of ISC license

"""Instance generators.

This module builds the small two-agent example instances, seeded random
ONE-ONE-LQ and MANY-ONE-LQ instances, and the instances produced by the
reduction from independent set.
"""

import itertools
import logging
import random

import networkx

import lqmatch.classic
import lqmatch.exception
import lqmatch.instance
import lqmatch.matching
import lqmatch.optimality
import lqmatch.tokenizer

logger = logging.getLogger(__name__)

#: Variant of the two-agent example: only b2 has a lower quota
BASE = 'base'
#: Variant of the two-agent example: only b1 has a lower quota
B1LQ = 'b1lq'
#: Variant of the two-agent example: both resources have lower quotas
BOTHLQ = 'bothlq'

_FIG1_QUOTAS = {
    BASE: {'b1': (0, 1), 'b2': (1, 1)},
    B1LQ: {'b1': (1, 1), 'b2': (0, 1)},
    BOTHLQ: {'b1': (1, 1), 'b2': (1, 1)},
}


class BadParameter(lqmatch.exception.LQException):
    """A generator parameter is out of range."""


class RetriesExhausted(lqmatch.exception.LQException):
    """No feasible instance was generated within the retry limit."""
    supp_kwargs = {'retries'}
    fmt = "no feasible instance after {retries} attempts"


class SimpleGraph(object):

    """An undirected graph without loops or parallel edges.

    Vertices are ``1`` .. ``n``.  Edges are ``(u, v)`` tuples with
    ``u < v``; their order is the edge index order.
    """

    __slots__ = ['n', 'edges']

    def __init__(self, n, edges=()):
        if n < 0:
            raise BadParameter('vertex count must not be negative')
        normalized = []
        seen = set()
        for (u, v) in edges:
            if u == v:
                raise BadParameter('self-loop at vertex %d' % u)
            if not (1 <= u <= n and 1 <= v <= n):
                raise BadParameter('edge (%d, %d) has a vertex outside '
                                   '1..%d' % (u, v, n))
            e = (min(u, v), max(u, v))
            if e in seen:
                raise BadParameter('duplicate edge (%d, %d)' % e)
            seen.add(e)
            normalized.append(e)
        self.n = n
        self.edges = tuple(normalized)

    @property
    def m(self):
        return len(self.edges)

    def incident(self, i):
        """Return the 1-based indices of the edges incident to vertex *i*.
        """

        return [j + 1 for (j, e) in enumerate(self.edges) if i in e]

    def degree(self, i):
        return len(self.incident(i))

    def is_independent(self, vertices):
        vs = set(vertices)
        return not any(u in vs and v in vs for (u, v) in self.edges)

    def to_networkx(self):
        graph = networkx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.edges)
        return graph

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return False
        return self.n == other.n and self.edges == other.edges

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return '<lqmatch.gen.SimpleGraph n=%d m=%d>' % (self.n, self.m)


def graph_from_text(text, filename=None):
    """Read a graph: a line ``n m`` followed by *m* lines ``u v``.

    Raises ``lqmatch.exception.SyntaxError`` on malformed text and
    ``lqmatch.gen.BadParameter`` on an invalid graph.

    Returns an ``lqmatch.gen.SimpleGraph``.
    """

    tok = lqmatch.tokenizer.Tokenizer(text, filename)

    def _skip_blank():
        while True:
            token = tok.get()
            if not token.is_eol():
                tok.unget(token)
                return token

    try:
        if _skip_blank().is_eof():
            raise lqmatch.exception.UnexpectedEnd('expecting a header line')
        n = tok.get_int()
        m = tok.get_int()
        tok.get_eol()
        edges = []
        for _ in range(m):
            if _skip_blank().is_eof():
                raise lqmatch.exception.UnexpectedEnd(
                    'expecting %d edges, got %d' % (m, len(edges)))
            u = tok.get_int()
            v = tok.get_int()
            tok.get_eol()
            edges.append((u, v))
        if not _skip_blank().is_eof():
            raise lqmatch.exception.SyntaxError('more than %d edges' % m)
    except lqmatch.exception.SyntaxError as detail:
        raise tok.located(detail)
    return SimpleGraph(n, edges)


def graph_from_file(f, filename=None):
    """Read a graph from a file.

    *f*, a file or ``str``.  If *f* is a string, it is treated
    as the name of a file to open.
    """

    if isinstance(f, str):
        if filename is None:
            filename = f
        with open(f, 'r', encoding='utf-8') as fh:
            return graph_from_text(fh.read(), filename)
    return graph_from_text(f.read(), filename)


def graph_to_text(g):
    lines = ['%d %d' % (g.n, g.m)]
    lines.extend('%d %d' % e for e in g.edges)
    return '\n'.join(lines) + '\n'


def gen_random_graph(n, p, seed=None):
    """Return a G(n, p) random graph."""
    graph = networkx.gnp_random_graph(n, p, seed=seed)
    return SimpleGraph(n, sorted((u + 1, v + 1) for (u, v) in graph.edges()))


def all_graphs(n):
    """Generate every graph on *n* vertices, one per edge subset."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for size in range(len(pairs) + 1):
        for edges in itertools.combinations(pairs, size):
            yield SimpleGraph(n, edges)


def gen_fig1(variant=BASE):
    """Build the two-agent, two-resource example instance.

    a1 prefers b1 to b2 and a2 accepts only b1; b1 prefers a1 to a2 and
    b2 accepts only a1.  *variant* selects the quotas: ``BASE`` gives b1
    ``[0,1]`` and b2 ``[1,1]``, ``B1LQ`` swaps them and ``BOTHLQ`` gives
    both ``[1,1]``.

    Raises ``lqmatch.gen.BadParameter`` on an unknown variant.

    Returns an ``lqmatch.instance.Instance``.
    """

    quotas = _FIG1_QUOTAS.get(variant)
    if quotas is None:
        raise BadParameter("unknown variant '%s'" % variant)
    return lqmatch.instance.Instance(
        ['a1', 'a2'], ['b1', 'b2'], quotas,
        {'a1': ['b1', 'b2'], 'a2': ['b1']},
        {'b1': ['a1', 'a2'], 'b2': ['a1']})


def _vertex_agent(i):
    return 'a%d' % i


def _edge_agent(j):
    return 'e%d' % j


def _vertex_resource(i, u):
    return 'b%d_%d' % (i, u)


def _cover_resource(j):
    return 'x%d' % j


def gen_indset_reduction(g, k):
    """Reduce the question "has *g* an independent set of *k* vertices?"
    to a ONE-ONE-LQ instance.

    Every vertex *i* gets an agent ``a<i>`` and ``deg(i) + 1`` resources
    ``b<i>_<u>`` with quotas ``[0,1]``; every edge *j* gets an agent
    ``e<j>``; *k* resources ``x<j>`` get quotas ``[1,1]``.  ``a<i>``
    prefers its own ``b<i>_*`` then every ``x``; ``e<j>`` prefers the
    resources of its lower endpoint then those of its higher one.
    ``b<i>_<u>`` prefers ``a<i>`` then the agents of the edges incident to
    *i*; every ``x`` lists all vertex agents.

    The graph has an independent set of size *k* exactly when the
    instance has a feasible envy-free matching matching all agents.

    Raises ``lqmatch.gen.BadParameter`` unless 1 <= k <= n.

    Returns an ``lqmatch.instance.Instance``.
    """

    if not 1 <= k <= g.n:
        raise BadParameter('k must be between 1 and %d, got %d' % (g.n, k))
    vertices = range(1, g.n + 1)
    own = {i: [_vertex_resource(i, u) for u in range(1, g.degree(i) + 2)]
           for i in vertices}
    cover = [_cover_resource(j) for j in range(1, k + 1)]
    agents = [_vertex_agent(i) for i in vertices]
    agents.extend(_edge_agent(j) for j in range(1, g.m + 1))
    resources = [b for i in vertices for b in own[i]] + cover
    quotas = {b: (0, 1) for i in vertices for b in own[i]}
    quotas.update((x, (1, 1)) for x in cover)
    agent_prefs = {}
    resource_prefs = {}
    for i in vertices:
        agent_prefs[_vertex_agent(i)] = own[i] + cover
        listed = [_vertex_agent(i)] + [_edge_agent(j) for j in g.incident(i)]
        for b in own[i]:
            resource_prefs[b] = listed
    for (j, (u, v)) in enumerate(g.edges, 1):
        agent_prefs[_edge_agent(j)] = own[u] + own[v]
    for x in cover:
        resource_prefs[x] = [_vertex_agent(i) for i in vertices]
    inst = lqmatch.instance.Instance(agents, resources, quotas, agent_prefs,
                                     resource_prefs)
    logger.debug('independent set reduction: n=%d m=%d k=%d -> %d agents, '
                 '%d resources', g.n, g.m, k, len(agents), len(resources))
    return inst


def indset_witness(g, k, vertices):
    """Build the feasible envy-free matching of size m + n that an
    independent set yields in ``gen_indset_reduction(g, k)``.

    The agents of *vertices* are matched to the ``x`` resources by an
    agent-optimal stable matching; every other agent is matched by an
    agent-optimal stable matching on the resources that are neither ``x``
    resources nor owned by *vertices*.

    Raises ``lqmatch.gen.BadParameter`` unless *vertices* is an
    independent set of size *k*.

    Returns an ``lqmatch.matching.Matching``.
    """

    chosen = set(vertices)
    if len(chosen) != k or not g.is_independent(chosen):
        raise BadParameter('not an independent set of size %d' % k)
    inst = gen_indset_reduction(g, k)
    chosen_agents = set(_vertex_agent(i) for i in chosen)
    cover = set(_cover_resource(j) for j in range(1, k + 1))
    blocked = set(_vertex_resource(i, u) for i in chosen
                  for u in range(1, g.degree(i) + 2)) | cover
    top = inst.subgraph((a, b) for (a, b) in inst.edges()
                        if a in chosen_agents and b in cover)
    rest = inst.subgraph((a, b) for (a, b) in inst.edges()
                         if a not in chosen_agents and b not in blocked)
    return lqmatch.classic.stable_agent_optimal(top).union(
        lqmatch.classic.stable_agent_optimal(rest))


def gen_random(n_agents, n_resources, n_lq, max_list_len, seed=None,
               max_retries=100, max_upper=1):
    """Generate a random instance admitting a feasible matching.

    Each agent accepts between 1 and *max_list_len* resources, drawn and
    ordered uniformly at random; each resource ranks the agents accepting
    it in uniformly random order.  *n_lq* resources chosen at random get a
    positive lower quota.  Upper quotas are drawn from 1 .. *max_upper*;
    with ``max_upper == 1`` the instance is ONE-ONE-LQ.

    Instances are drawn until ``feasibility_exists`` holds.  Equal
    arguments give equal instances.

    Raises ``lqmatch.gen.BadParameter`` and
    ``lqmatch.gen.RetriesExhausted``.

    Returns an ``lqmatch.instance.Instance``.
    """

    if n_agents < 0 or n_resources < 0:
        raise BadParameter('vertex counts must not be negative')
    if not 0 <= n_lq <= n_resources:
        raise BadParameter('n_lq must be between 0 and %d' % n_resources)
    if max_list_len < 1:
        raise BadParameter('max_list_len must be positive')
    if max_upper < 1:
        raise BadParameter('max_upper must be positive')
    rng = random.Random(seed)
    agents = ['a%d' % i for i in range(1, n_agents + 1)]
    resources = ['b%d' % i for i in range(1, n_resources + 1)]
    longest = min(max_list_len, n_resources)
    for attempt in range(1, max_retries + 1):
        agent_prefs = {}
        resource_prefs = {b: [] for b in resources}
        for a in agents:
            if longest == 0:
                agent_prefs[a] = []
                continue
            prefs = rng.sample(resources, rng.randint(1, longest))
            agent_prefs[a] = prefs
            for b in prefs:
                resource_prefs[b].append(a)
        for b in resources:
            rng.shuffle(resource_prefs[b])
        lq = set(rng.sample(resources, n_lq))
        quotas = {}
        for b in resources:
            upper = rng.randint(1, max_upper)
            lower = rng.randint(1, upper) if b in lq else 0
            quotas[b] = (lower, upper)
        inst = lqmatch.instance.Instance(agents, resources, quotas,
                                         agent_prefs, resource_prefs)
        if lqmatch.optimality.feasibility_exists(inst):
            logger.debug('random instance found after %d attempts', attempt)
            return inst
    raise RetriesExhausted(retries=max_retries)
