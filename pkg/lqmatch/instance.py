# Copyright (C) lqmatch contributors, see LICENSE for text of ISC license

"""Two-sided preference instances with lower and upper quotas."""

import lqmatch.classic
import lqmatch.exception
import lqmatch.matching
import lqmatch.tokenizer

#: The first line of every instance file
HEADER = '@lqmatch v1'

_FORBIDDEN_ID_CHARS = frozenset(' \t\r\n#:[],')


class BadInstance(lqmatch.exception.LQException):
    """The instance is not valid."""


class AsymmetricEdge(BadInstance):
    """Acceptability is not mutual."""
    supp_kwargs = {'agent', 'resource'}
    fmt = "{agent} and {resource} are not mutually acceptable: " \
          "the pair appears in only one preference list"


class DuplicateEntry(BadInstance):
    """A preference list names the same vertex twice."""
    supp_kwargs = {'owner', 'entry'}
    fmt = "the preference list of {owner} names {entry} more than once"


class DuplicateId(BadInstance):
    """A vertex is declared twice."""
    supp_kwargs = {'id'}
    fmt = "{id} is declared more than once"


class BadQuota(BadInstance):
    """A quota pair violates 0 <= lower <= upper, upper >= 1."""
    supp_kwargs = {'resource', 'lower', 'upper'}
    fmt = "resource {resource} has invalid quotas [{lower},{upper}]"


class UnknownId(BadInstance):
    """A preference list names an undeclared vertex."""
    supp_kwargs = {'owner', 'entry'}
    fmt = "the preference list of {owner} names undeclared {entry}"


class BadId(BadInstance):
    """An identifier cannot be written in the text format."""
    supp_kwargs = {'id'}
    fmt = "'{id}' is not a valid identifier"


def _check_id(vid):
    if not isinstance(vid, str) or vid == '' or \
       _FORBIDDEN_ID_CHARS.intersection(vid):
        raise BadId(id=vid)


class Instance(object):

    """A bipartite preference system with per-resource quota pairs.

    *agents* and *resources* are ordered tuples of ids; their order is the
    canonical index order used for every tie-break.  ``agent_prefs[a]``
    and ``resource_prefs[b]`` are tuples, most-preferred first.
    ``quotas[b]`` is a ``(lower, upper)`` tuple.

    Instances of the class are immutable.
    """

    __slots__ = ['agents', 'resources', 'quotas', 'agent_prefs',
                 'resource_prefs', '_agent_index', '_resource_index',
                 '_agent_rank', '_resource_rank']

    def __init__(self, agents, resources, quotas, agent_prefs,
                 resource_prefs):
        """Build and validate an instance.

        Raises a subclass of ``BadInstance`` if the data is not valid.
        """

        agents = tuple(agents)
        resources = tuple(resources)
        agent_index = {}
        for a in agents:
            _check_id(a)
            if a in agent_index:
                raise DuplicateId(id=a)
            agent_index[a] = len(agent_index)
        resource_index = {}
        for b in resources:
            _check_id(b)
            if b in resource_index:
                raise DuplicateId(id=b)
            resource_index[b] = len(resource_index)
        aprefs = {}
        for a in agents:
            aprefs[a] = tuple(agent_prefs.get(a, ()))
        rprefs = {}
        qs = {}
        for b in resources:
            rprefs[b] = tuple(resource_prefs.get(b, ()))
            (lower, upper) = quotas.get(b, (0, 1))
            if lower < 0 or upper < 1 or lower > upper:
                raise BadQuota(resource=b, lower=lower, upper=upper)
            qs[b] = (int(lower), int(upper))
        for owner in agent_prefs:
            if owner not in agent_index:
                raise UnknownId(owner='the instance', entry=owner)
        for owner in resource_prefs:
            if owner not in resource_index:
                raise UnknownId(owner='the instance', entry=owner)
        agent_rank = {}
        for a in agents:
            ranks = {}
            for (i, b) in enumerate(aprefs[a]):
                if b not in resource_index:
                    raise UnknownId(owner=a, entry=b)
                if b in ranks:
                    raise DuplicateEntry(owner=a, entry=b)
                ranks[b] = i + 1
            agent_rank[a] = ranks
        resource_rank = {}
        for b in resources:
            ranks = {}
            for (i, a) in enumerate(rprefs[b]):
                if a not in agent_index:
                    raise UnknownId(owner=b, entry=a)
                if a in ranks:
                    raise DuplicateEntry(owner=b, entry=a)
                ranks[a] = i + 1
            resource_rank[b] = ranks
        for a in agents:
            for b in aprefs[a]:
                if a not in resource_rank[b]:
                    raise AsymmetricEdge(agent=a, resource=b)
        for b in resources:
            for a in rprefs[b]:
                if b not in agent_rank[a]:
                    raise AsymmetricEdge(agent=a, resource=b)
        setter = super(Instance, self).__setattr__
        setter('agents', agents)
        setter('resources', resources)
        setter('quotas', qs)
        setter('agent_prefs', aprefs)
        setter('resource_prefs', rprefs)
        setter('_agent_index', agent_index)
        setter('_resource_index', resource_index)
        setter('_agent_rank', agent_rank)
        setter('_resource_rank', resource_rank)

    def __setattr__(self, name, value):
        # Instances are immutable
        raise TypeError("object doesn't support attribute assignment")

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return False
        return self.agents == other.agents and \
            self.resources == other.resources and \
            self.quotas == other.quotas and \
            self.agent_prefs == other.agent_prefs and \
            self.resource_prefs == other.resource_prefs

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def __repr__(self):
        return '<lqmatch.instance.Instance %d agents, %d resources, ' \
            '%d edges>' % (len(self.agents), len(self.resources),
                           self.num_edges())

    def __str__(self):
        return to_text(self)

    # Quotas

    def lower(self, b):
        return self.quotas[b][0]

    def upper(self, b):
        return self.quotas[b][1]

    def is_lq(self, b):
        """Is *b* a resource with a positive lower quota?"""
        return self.quotas[b][0] > 0

    def lq_resources(self):
        """Return the LQ resources in index order."""
        return [b for b in self.resources if self.quotas[b][0] > 0]

    def is_one_one(self):
        """Does every resource have upper quota 1?"""
        return all(self.quotas[b][1] == 1 for b in self.resources)

    def check_one_one(self):
        """Raise ``lqmatch.exception.NotOneOne`` unless every resource has
        upper quota 1.
        """

        for b in self.resources:
            if self.quotas[b][1] != 1:
                raise lqmatch.exception.NotOneOne(resource=b,
                                                  upper=self.quotas[b][1])

    # Edges and ranks

    def agent_index(self, a):
        return self._agent_index[a]

    def resource_index(self, b):
        return self._resource_index[b]

    def has_agent(self, a):
        return a in self._agent_index

    def has_resource(self, b):
        return b in self._resource_index

    def has_edge(self, a, b):
        ranks = self._agent_rank.get(a)
        return ranks is not None and b in ranks

    def agent_rank(self, a, b):
        """The 1-based rank of *b* in the list of *a*, or ``None``."""
        return self._agent_rank[a].get(b)

    def resource_rank(self, b, a):
        """The 1-based rank of *a* in the list of *b*, or ``None``."""
        return self._resource_rank[b].get(a)

    def agent_prefers(self, a, b1, b2):
        """Does *a* strictly prefer *b1* to *b2*?

        ``None`` stands for being unmatched and is least preferred.
        """

        if b1 is None:
            return False
        if b2 is None:
            return True
        return self._agent_rank[a][b1] < self._agent_rank[a][b2]

    def resource_prefers(self, b, a1, a2):
        """Does *b* strictly prefer *a1* to *a2*?

        ``None`` stands for an empty seat and is least preferred.
        """

        if a1 is None:
            return False
        if a2 is None:
            return True
        return self._resource_rank[b][a1] < self._resource_rank[b][a2]

    def worst_assigned(self, b, agents):
        """Return the agent of *agents* that *b* ranks last."""
        return max(agents, key=self._resource_rank[b].__getitem__)

    def edge_key(self, edge):
        return (self._agent_index[edge[0]], self._resource_index[edge[1]])

    def sort_edges(self, edges):
        """Return *edges* as a list sorted by (agent index, resource index).
        """

        return sorted(edges, key=self.edge_key)

    def edges(self):
        """Return all edges, sorted by (agent index, resource index)."""
        return self.sort_edges((a, b) for a in self.agents
                               for b in self.agent_prefs[a])

    def num_edges(self):
        return sum(len(p) for p in self.agent_prefs.values())

    def subgraph(self, edges, quotas=None, keep_isolated=False):
        """Return the instance spanned by *edges*.

        Preference lists keep their relative order.  Vertices incident to
        no kept edge are dropped unless *keep_isolated* is true.  *quotas*
        optionally overrides the quota pair of some resources.

        Returns an ``lqmatch.instance.Instance``.
        """

        kept = set(tuple(e) for e in edges)
        agent_prefs = {}
        for a in self.agents:
            agent_prefs[a] = [b for b in self.agent_prefs[a] if (a, b) in kept]
        resource_prefs = {}
        for b in self.resources:
            resource_prefs[b] = [a for a in self.resource_prefs[b]
                                 if (a, b) in kept]
        if keep_isolated:
            agents = self.agents
            resources = self.resources
        else:
            agents = [a for a in self.agents if agent_prefs[a]]
            resources = [b for b in self.resources if resource_prefs[b]]
        new_quotas = {b: self.quotas[b] for b in resources}
        if quotas:
            for (b, q) in quotas.items():
                if b in new_quotas:
                    new_quotas[b] = q
        return Instance(agents, resources, new_quotas,
                        {a: agent_prefs[a] for a in agents},
                        {b: resource_prefs[b] for b in resources})


class ParamProfile(object):

    """The structural parameters of an instance.

    q: number of LQ resources.
    ell_lq: longest preference list of an LQ resource.
    d: deficiency with respect to a stable matching.
    n_d: number of deficient resources in that stable matching.
    a_bar: number of distinct agents acceptable to LQ resources.
    t: largest number of non-LQ resources common to two agents' lists.
    s: size of a stable matching.
    """

    __slots__ = ['q', 'ell_lq', 'd', 'n_d', 'a_bar', 't', 's']

    #: field order used by ``to_dict`` and the CLI
    FIELDS = ('q', 'ell_lq', 'd', 'n_d', 'a_bar', 't', 's')

    def __init__(self, q, ell_lq, d, n_d, a_bar, t, s):
        self.q = q
        self.ell_lq = ell_lq
        self.d = d
        self.n_d = n_d
        self.a_bar = a_bar
        self.t = t
        self.s = s

    def to_dict(self):
        return {f: getattr(self, f) for f in self.FIELDS}

    def __eq__(self, other):
        if not isinstance(other, ParamProfile):
            return False
        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def __repr__(self):
        return '<lqmatch.instance.ParamProfile %s>' % \
            ' '.join('%s=%d' % (f, getattr(self, f)) for f in self.FIELDS)


def compute_params(inst):
    """Compute the parameter profile of *inst*.

    *s*, *d* and *n_d* are taken from the agent-optimal stable matching.

    Returns an ``lqmatch.instance.ParamProfile``.
    """

    lq = inst.lq_resources()
    q = len(lq)
    ell_lq = max([len(inst.resource_prefs[b]) for b in lq] or [0])
    a_bar = len(set(a for b in lq for a in inst.resource_prefs[b]))
    stable = lqmatch.classic.stable_agent_optimal(inst)
    (d, n_d, _) = lqmatch.classic.deficiency(inst, stable)
    common = {}
    for b in inst.resources:
        if inst.is_lq(b):
            continue
        listed = sorted(inst.resource_prefs[b], key=inst.agent_index)
        for i in range(len(listed)):
            for j in range(i + 1, len(listed)):
                pair = (listed[i], listed[j])
                common[pair] = common.get(pair, 0) + 1
    t = max(common.values()) if common else 0
    return ParamProfile(q, ell_lq, d, n_d, a_bar, t, len(stable))


def clone_to_one_one(inst):
    """Expand every resource into unit-capacity copies.

    A resource *b* with quotas ``[lower, upper]`` and ``upper > 1`` becomes
    copies ``b(1)`` .. ``b(upper)``; the first *lower* copies get quotas
    ``[1,1]`` and the rest ``[0,1]``.  Every copy inherits the preference
    list of *b*, and every agent list has *b* replaced in place by its
    copies in order.  Resources with upper quota 1 are kept as they are.

    Returns an ``(lqmatch.instance.Instance, dict)`` tuple; the dict maps
    each original resource to the tuple of its copies.
    """

    clone_map = {}
    resources = []
    quotas = {}
    resource_prefs = {}
    for b in inst.resources:
        (lower, upper) = inst.quotas[b]
        if upper == 1:
            copies = (b,)
            quotas[b] = (lower, upper)
        else:
            copies = tuple('%s(%d)' % (b, i) for i in range(1, upper + 1))
            for (i, c) in enumerate(copies):
                quotas[c] = (1, 1) if i < lower else (0, 1)
        clone_map[b] = copies
        for c in copies:
            resources.append(c)
            resource_prefs[c] = inst.resource_prefs[b]
    agent_prefs = {}
    for a in inst.agents:
        agent_prefs[a] = [c for b in inst.agent_prefs[a] for c in clone_map[b]]
    cloned = Instance(inst.agents, resources, quotas, agent_prefs,
                      resource_prefs)
    return (cloned, clone_map)


def unclone_matching(clone_map, m):
    """Map a matching of a cloned instance back to the original resources.

    Returns an ``lqmatch.matching.Matching``.
    """

    base = {}
    for (b, copies) in clone_map.items():
        for c in copies:
            base[c] = b
    return lqmatch.matching.Matching((a, base[c]) for (a, c) in m)


class _InstanceReader(object):

    """Read the canonical instance text format.

    tok: the ``lqmatch.tokenizer.Tokenizer``
    agents, resources: ids in declaration order
    quotas, agent_prefs, resource_prefs: the collected declarations
    """

    def __init__(self, tok):
        self.tok = tok
        self.agents = []
        self.resources = []
        self.quotas = {}
        self.agent_prefs = {}
        self.resource_prefs = {}
        self.seen_header = False

    def _header_line(self, token):
        if token.value != '@lqmatch':
            raise lqmatch.exception.SyntaxError(
                "expected header '%s'" % HEADER)
        version = self.tok.get_identifier()
        if version != 'v1':
            raise lqmatch.exception.SyntaxError(
                "unsupported format version '%s'" % version)
        self.tok.get_eol()
        self.seen_header = True

    def _agent_line(self):
        a = self.tok.get_identifier()
        self.tok.get_delimiter(':')
        prefs = self.tok.get_identifiers_to_eol()
        if a in self.agent_prefs:
            raise DuplicateId(id=a)
        self.agents.append(a)
        self.agent_prefs[a] = prefs

    def _resource_line(self):
        b = self.tok.get_identifier()
        self.tok.get_delimiter('[')
        lower = self.tok.get_int()
        self.tok.get_delimiter(',')
        upper = self.tok.get_int()
        self.tok.get_delimiter(']')
        self.tok.get_delimiter(':')
        prefs = self.tok.get_identifiers_to_eol()
        if b in self.resource_prefs:
            raise DuplicateId(id=b)
        self.resources.append(b)
        self.quotas[b] = (lower, upper)
        self.resource_prefs[b] = prefs

    def read(self):
        """Read the input and build an instance.

        Raises ``lqmatch.exception.SyntaxError`` with a
        ``<filename>:<line>:<column>:`` prefix on malformed text, or a
        subclass of ``BadInstance`` if the text describes an invalid
        instance.
        """

        try:
            while True:
                token = self.tok.get()
                if token.is_eof():
                    break
                elif token.is_eol():
                    continue
                elif not token.is_identifier():
                    raise lqmatch.exception.SyntaxError(
                        "unexpected '%s'" % token.value)
                if not self.seen_header:
                    self._header_line(token)
                elif token.value == 'agent':
                    self._agent_line()
                elif token.value == 'resource':
                    self._resource_line()
                else:
                    raise lqmatch.exception.SyntaxError(
                        "unknown line type '%s'" % token.value)
        except lqmatch.exception.SyntaxError as detail:
            raise self.tok.located(detail)
        if not self.seen_header:
            raise self.tok.located("expected header '%s'" % HEADER)
        return Instance(self.agents, self.resources, self.quotas,
                        self.agent_prefs, self.resource_prefs)


def from_text(text, filename=None):
    """Build an instance from the canonical text format.

    *text*, a ``str``, the instance text.

    *filename*, a ``str`` or ``None``, the filename to emit when
    describing where an error occurred; the default is ``'<string>'``.

    Raises ``lqmatch.exception.SyntaxError`` on malformed text and a
    subclass of ``lqmatch.instance.BadInstance`` on an invalid instance.

    Returns an ``lqmatch.instance.Instance``.
    """

    tok = lqmatch.tokenizer.Tokenizer(text, filename)
    return _InstanceReader(tok).read()


def from_file(f, filename=None):
    """Read an instance from a file.

    *f*, a file or ``str``.  If *f* is a string, it is treated
    as the name of a file to open.

    Returns an ``lqmatch.instance.Instance``.
    """

    if isinstance(f, str):
        if filename is None:
            filename = f
        with open(f, 'r', encoding='utf-8') as fh:
            return from_text(fh.read(), filename)
    if filename is None:
        filename = '<file>'
    return from_text(f.read(), filename)


def to_text(inst):
    """Convert an instance to the canonical text format.

    Agents are written first, then resources, each in index order.

    Returns a ``str``.
    """

    lines = [HEADER]
    for a in inst.agents:
        lines.append(' '.join(['agent %s:' % a] + list(inst.agent_prefs[a])))
    for b in inst.resources:
        (lower, upper) = inst.quotas[b]
        lines.append(' '.join(['resource %s [%d,%d]:' % (b, lower, upper)] +
                              list(inst.resource_prefs[b])))
    return '\n'.join(lines) + '\n'


def to_file(inst, f):
    """Write an instance to a file.

    *f*, a file or ``str``.  If *f* is a string, it is treated
    as the name of a file to open.
    """

    text = to_text(inst)
    if isinstance(f, str):
        with open(f, 'w', encoding='utf-8') as fh:
            fh.write(text)
    else:
        f.write(text)
