# Copyright (C) lqmatch contributors, see LICENSE for text of ISC license

"""Matchings between agents and resources."""

import lqmatch.exception
import lqmatch.tokenizer


class BadMatching(lqmatch.exception.LQException):
    """The edge set is not a matching."""


class AgentMatchedTwice(BadMatching):
    """An agent appears in more than one edge."""
    supp_kwargs = {'agent'}
    fmt = "agent {agent} is matched more than once"


class EdgeNotInInstance(BadMatching):
    """A matched pair is not mutually acceptable in the instance."""
    supp_kwargs = {'agent', 'resource'}
    fmt = "({agent}, {resource}) is not an edge of the instance"


class CapacityExceeded(BadMatching):
    """A resource is assigned more agents than its upper quota."""
    supp_kwargs = {'resource', 'upper'}
    fmt = "resource {resource} is assigned more than {upper} agents"


class Matching(object):

    """A set of (agent, resource) edges.

    Every agent appears in at most one edge.  The resource side is
    unrestricted here; capacities are checked against an instance by
    ``validate()``.  Instances of the class are immutable.
    """

    __slots__ = ['edges', '_by_agent', '_by_resource']

    def __init__(self, edges=()):
        """*edges* is any iterable of ``(agent, resource)`` pairs.
        """

        edges = frozenset((a, b) for (a, b) in edges)
        by_agent = {}
        by_resource = {}
        for (a, b) in edges:
            if a in by_agent:
                raise AgentMatchedTwice(agent=a)
            by_agent[a] = b
            by_resource.setdefault(b, set()).add(a)
        by_resource = {b: frozenset(s) for (b, s) in by_resource.items()}
        super(Matching, self).__setattr__('edges', edges)
        super(Matching, self).__setattr__('_by_agent', by_agent)
        super(Matching, self).__setattr__('_by_resource', by_resource)

    def __setattr__(self, name, value):
        # Matchings are immutable
        raise TypeError("object doesn't support attribute assignment")

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, edge):
        return tuple(edge) in self.edges

    def __eq__(self, other):
        if not isinstance(other, Matching):
            return False
        return self.edges == other.edges

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.edges)

    def __repr__(self):
        return '<lqmatch.matching.Matching %s>' % \
            sorted(self.edges, key=lambda e: (str(e[0]), str(e[1])))

    def partner(self, agent):
        """The resource *agent* is matched to, or ``None`` when unmatched.
        """

        return self._by_agent.get(agent)

    def assigned(self, resource):
        """Return the ``frozenset`` of agents matched to *resource*.
        """

        return self._by_resource.get(resource, frozenset())

    def occupancy(self, resource):
        return len(self._by_resource.get(resource, ()))

    def matched_agents(self):
        return frozenset(self._by_agent)

    def matched_resources(self):
        return frozenset(self._by_resource)

    def union(self, other):
        """Return a new matching holding the edges of both matchings.

        Raises ``AgentMatchedTwice`` if the union is not a matching.
        """

        return Matching(self.edges | frozenset(other))

    __or__ = union

    def replace(self, old, new):
        """Return a new matching with edge *old* swapped for edge *new*.
        """

        return Matching((self.edges - {tuple(old)}) | {tuple(new)})

    def sorted_edges(self, inst):
        """Return the edges as a list sorted by (agent index, resource
        index) of *inst*.
        """

        return inst.sort_edges(self.edges)


def validate(inst, m):
    """Check that *m* is a matching of *inst*.

    Raises ``EdgeNotInInstance`` if some pair is not an edge of *inst*,
    or ``CapacityExceeded`` if some resource exceeds its upper quota.
    """

    foreign = [(a, b) for (a, b) in m.edges if not inst.has_edge(a, b)]
    if foreign:
        (a, b) = min(foreign, key=lambda e: (str(e[0]), str(e[1])))
        raise EdgeNotInInstance(agent=a, resource=b)
    for b in m.matched_resources():
        if m.occupancy(b) > inst.upper(b):
            raise CapacityExceeded(resource=b, upper=inst.upper(b))


def to_text(m, inst=None):
    """Convert a matching to text, one ``<agent> <resource>`` pair per line.

    *inst*, an ``lqmatch.instance.Instance`` or ``None``.  When given,
    lines are sorted by agent index; otherwise by agent id.

    Returns a ``str``.
    """

    if inst is not None:
        edges = m.sorted_edges(inst)
    else:
        edges = sorted(m.edges)
    return ''.join('%s %s\n' % (a, b) for (a, b) in edges)


def from_text(text, filename=None):
    """Read a matching from ``<agent> <resource>`` lines.

    Blank lines and ``#`` comments are ignored.

    Raises ``lqmatch.exception.SyntaxError`` if a line does not hold
    exactly two identifiers.

    Returns an ``lqmatch.matching.Matching``.
    """

    tok = lqmatch.tokenizer.Tokenizer(text, filename)
    edges = []
    token = None
    try:
        while True:
            token = tok.get()
            if token.is_eof():
                break
            if token.is_eol():
                continue
            tok.unget(token)
            values = tok.get_identifiers_to_eol()
            if len(values) != 2:
                raise lqmatch.exception.SyntaxError(
                    'expecting <agent> <resource>')
            edges.append((values[0], values[1]))
    except lqmatch.exception.SyntaxError as detail:
        raise tok.located(detail, token)
    return Matching(edges)


def from_file(f, filename=None):
    """Read a matching from a file.

    *f*, a file or ``str``.  If *f* is a string, it is treated
    as the name of a file to open.

    Returns an ``lqmatch.matching.Matching``.
    """

    if isinstance(f, str):
        if filename is None:
            filename = f
        with open(f, 'r', encoding='utf-8') as fh:
            return from_text(fh.read(), filename)
    return from_text(f.read(), filename)
