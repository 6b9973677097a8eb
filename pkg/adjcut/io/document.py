"""Line-oriented problem documents.

A document lists one directive per line; ``#`` starts a comment::

    # B and Q confound A
    treatment A
    outcome Y
    edge B A
    edge B T
    ...
    cost B 1
    cost T 2

Directives:

==============================  ==============================================
``edge U W``                    directed edge ``U -> W``
``treatment A``                 the treatment (exactly once)
``outcome Y``                   the outcome (exactly once)
``policy X1 X2 ...``            policy variables; may repeat
``latent U1 U2 ...``            unobserved variables; may repeat
``vertex W1 W2 ...``            declare vertices without edges; may repeat
``cost W 2.5``                  decimal cost of a declared vertex (at most once per vertex)
==============================  ==============================================

Vertices are declared by their first mention in any directive but ``cost``.
"""

import logging

from ..errors import ParseError, CostError
from ..graphs import DirectedGraph
from ..efficiency import CausalProblem
from ..utils import parse_cost, format_cost

logger = logging.getLogger(__name__)

#: Number of arguments each directive takes; None means one or more.
directives = {
    'edge': 2,
    'treatment': 1,
    'outcome': 1,
    'policy': None,
    'latent': None,
    'vertex': None,
    'cost': 2,
}


def _tokenize(text):
    """yield ``(line number, directive, arguments)`` for every non-blank line"""
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        word, *args = line.split()
        if word not in directives:
            raise ParseError('unknown directive {0!r}'.format(word), line=number)
        arity = directives[word]
        if arity is None and not args:
            raise ParseError('{0!r} needs at least one vertex'.format(word), line=number)
        if arity is not None and len(args) != arity:
            raise ParseError('{0!r} takes {1} argument{2}, got {3}'
                             .format(word, arity, '' if arity == 1 else 's', len(args)), line=number)
        yield number, word, args


def parse_problem(text):
    """Parse a problem document into a :class:`~adjcut.efficiency.CausalProblem`.

    Parameters
    ----------
    text : str
        Document text; LF or CRLF line endings

    Returns
    -------
    CausalProblem

    Raises
    ------
    ParseError
        a line is malformed, a role is missing or repeated, or a cost is
        repeated or names an undeclared vertex
    CostError
        a cost is malformed or not strictly positive (the message carries the
        line number)
    CycleError, ProblemError
        the document is well formed but describes an invalid problem
    """
    vertices = set()
    edges = set()
    roles = {}
    policy, latent = set(), set()
    costs, cost_lines = {}, {}

    for number, word, args in _tokenize(text):
        if word == 'edge':
            u, w = args
            if u == w:
                raise ParseError('self-loop on vertex {0!r}'.format(u), line=number)
            edges.add((u, w))
            vertices.update(args)
        elif word in ('treatment', 'outcome'):
            if word in roles:
                raise ParseError('{0} given twice (first on line {1})'.format(word, roles[word][1]), line=number)
            roles[word] = (args[0], number)
            vertices.add(args[0])
        elif word == 'policy':
            policy.update(args)
            vertices.update(args)
        elif word == 'latent':
            latent.update(args)
            vertices.update(args)
        elif word == 'vertex':
            vertices.update(args)
        elif word == 'cost':
            w, value = args
            if w in costs:
                raise ParseError('cost for {0!r} given twice (first on line {1})'
                                 .format(w, cost_lines[w]), line=number)
            try:
                costs[w] = parse_cost(value)
            except CostError as err:
                raise CostError('line {0}: {1}'.format(number, err)) from None
            cost_lines[w] = number

    for word in ('treatment', 'outcome'):
        if word not in roles:
            raise ParseError('missing {0} directive'.format(word))
    for w in sorted(costs, key=cost_lines.get):
        if w not in vertices:
            raise ParseError('cost for undeclared vertex {0!r}'.format(w), line=cost_lines[w])

    g = DirectedGraph(vertices=vertices, edges=edges)
    logger.debug('parsed %d vertices, %d edges, %d costs', len(vertices), len(edges), len(costs))
    return CausalProblem(g, roles['treatment'][0], roles['outcome'][0],
                         policy=policy, observed=g.vertices - latent, costs=costs)


def serialize_problem(p):
    """Canonical document text for a problem.

    Directives come in a fixed order (roles, policy, latent, isolated
    vertices, edges, costs), each group sorted by label, so equal problems
    serialize identically and ``parse_problem(serialize_problem(p)) == p``.

    Raises
    ------
    CostError
        a cost has no exact decimal form (e.g. 1/3)
    """
    lines = ['treatment ' + p.treatment, 'outcome ' + p.outcome]
    if p.policy:
        lines.append('policy ' + ' '.join(sorted(p.policy)))
    if p.latent:
        lines.append('latent ' + ' '.join(sorted(p.latent)))
    isolated = p.graph.vertices.difference(*p.graph.edges)
    if isolated:
        lines.append('vertex ' + ' '.join(sorted(isolated)))
    lines.extend('edge {0} {1}'.format(u, w) for u, w in sorted(p.graph.edges))
    for w in sorted(p.costs):
        text = format_cost(p.costs[w])
        if '/' in text:
            raise CostError('cost of {0!r} is {1}, which has no exact decimal form'.format(w, text))
        lines.append('cost {0} {1}'.format(w, text))
    return '\n'.join(lines) + '\n'
