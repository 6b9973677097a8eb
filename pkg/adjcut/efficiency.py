"""
Build the adjustment efficiency graph H1 of a causal problem and compare
separators of H1 by efficiency.

The construction runs in four steps, each exposed as its own function:

- :func:`proper_backdoor` drops the first edge of every causal path from the
  treatment to the outcome
- :func:`moralize` turns the ancestral part of that graph into the undirected
  graph H0
- :func:`project_out` removes the :func:`ignore_set` (latent or forbidden
  vertices) while keeping connectivity through them
- :func:`build_h1` wires every policy vertex to both treatment and outcome

Minimal adjustment sets of the problem are exactly the minimal treatment-outcome
separators of H1, so everything downstream works on H1 alone.
"""

import logging
import warnings
import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property

import networkx as nx
import pandas as pd

from .errors import ProblemError, GraphError, SeparatorError, MissingCostWarning, DiscardedCostWarning
from .graphs import (DirectedGraph, UndirectedGraph, check_known, check_acyclic,
                     ancestors, descendants, children, induced_subgraph,
                     is_separator, separates)
from .utils import as_cost, format_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CausalProblem:
    """A causal DAG with treatment, outcome, policy and observability roles and costs.

    Parameters
    ----------
    graph : DirectedGraph
        Causal DAG over all variables, hidden ones included
    treatment : str
        The treatment ``A``
    outcome : str
        The outcome ``Y``; must be a descendant of ``A``
    policy : iterable of str, optional
        Variables ``L`` the treatment rule depends on; non-descendants of ``A``
    observed : iterable of str, optional
        Observable variables ``N``; defaults to every vertex of `graph`
    costs : dict, optional
        Mapping label -> positive cost (int, decimal string, Fraction, ...).
        Observed vertices without a cost cost 1; a
        :class:`~adjcut.errors.MissingCostWarning` is issued for those that
        can appear in an adjustment set.

    Raises
    ------
    CycleError
        `graph` has a directed cycle
    ProblemError
        any other invariant fails (see :mod:`adjcut.errors`)
    """
    graph: DirectedGraph
    treatment: str
    outcome: str
    policy: frozenset = frozenset()
    observed: frozenset = None
    costs: dict = field(default_factory=dict)

    def __post_init__(self):
        g = self.graph
        policy = frozenset(self.policy)
        observed = g.vertices if self.observed is None else frozenset(self.observed)
        object.__setattr__(self, 'policy', policy)
        object.__setattr__(self, 'observed', observed)

        check_acyclic(g)
        check_known(g, [self.treatment, self.outcome])
        check_known(g, policy)
        check_known(g, observed)
        a, y = self.treatment, self.outcome
        if a == y:
            raise ProblemError('treatment and outcome must differ, both are {0!r}'.format(a))
        if y not in descendants(g, {a}):
            raise ProblemError('outcome {0!r} is not a descendant of treatment {1!r}'.format(y, a))
        unobserved = ({a, y} | policy) - observed
        if unobserved:
            raise ProblemError('treatment, outcome and policy variables must be observed; '
                               'latent: ' + format_set(unobserved))
        bad_policy = policy & descendants(g, {a})
        if bad_policy:
            raise ProblemError('policy variables must not descend from the treatment: '
                               + format_set(bad_policy))

        costs = {}
        for w, c in dict(self.costs).items():
            try:
                check_known(g, [w])
            except GraphError:
                raise ProblemError('cost given for unknown vertex {0!r}'.format(w))
            costs[w] = as_cost(c)
        object.__setattr__(self, 'costs', costs)

        missing = (self.relevant & observed) - forbidden(self) - {y} - set(costs)
        if missing:
            warnings.warn('no cost given for ' + format_set(missing) + '; using 1',
                          MissingCostWarning, stacklevel=3)

    @cached_property
    def relevant(self):
        """an_G({A, Y} | L): the only vertices that can matter for adjustment"""
        return ancestors(self.graph, {self.treatment, self.outcome} | self.policy)

    @property
    def latent(self):
        return self.graph.vertices - self.observed

    def cost(self, w):
        """cost of vertex `w`; 1 when none was given"""
        return self.costs.get(w, Fraction(1))

    def total_cost(self, z):
        return sum((self.cost(w) for w in z), Fraction(0))


@dataclass(frozen=True)
class EfficiencyGraph:
    """The adjustment efficiency graph H1 together with the data needed to optimize over it.

    Parameters
    ----------
    h1 : UndirectedGraph
    treatment, outcome : str
    policy : frozenset
        Policy variables; each must be adjacent to both treatment and outcome
    ignore : frozenset
        Vertices projected out of H0 (kept for diagnostics)
    candidate_costs : dict
        Cost of every vertex of `h1` other than treatment and outcome
    """
    h1: UndirectedGraph
    treatment: str
    outcome: str
    policy: frozenset = frozenset()
    ignore: frozenset = frozenset()
    candidate_costs: dict = field(default_factory=dict)

    def __post_init__(self):
        h, a, y = self.h1, self.treatment, self.outcome
        check_known(h, [a, y])
        policy = frozenset(self.policy)
        object.__setattr__(self, 'policy', policy)
        object.__setattr__(self, 'ignore', frozenset(self.ignore))
        costs = {w: as_cost(c) for w, c in self.candidate_costs.items()}
        if set(costs) != self.candidates:
            raise ProblemError('candidate costs must cover exactly the vertices of H1 other than '
                               'treatment and outcome; mismatch on '
                               + format_set(set(costs) ^ self.candidates))
        object.__setattr__(self, 'candidate_costs', costs)
        for w in policy:
            if not (h.has_edge(a, w) and h.has_edge(y, w)):
                raise ProblemError('policy vertex {0!r} must be adjacent to treatment and outcome in H1'.format(w))

    @cached_property
    def candidates(self):
        return self.h1.vertices - {self.treatment, self.outcome}

    def cost(self, z):
        """total cost of the vertex set `z`"""
        return sum((self.candidate_costs[w] for w in z), Fraction(0))

    def is_separator(self, z):
        return is_separator(self.h1, self.treatment, self.outcome, z)


def causal_nodes(p):
    """Vertices on a directed path from the treatment to the outcome, treatment excluded.

    >>> p = CausalProblem(DirectedGraph(edges={('A', 'Y')}), 'A', 'Y')
    >>> sorted(causal_nodes(p))
    ['Y']
    """
    g = p.graph
    return (descendants(g, {p.treatment}) & ancestors(g, {p.outcome})) - {p.treatment}


def forbidden(p):
    """forb(A, Y, G): descendants of the causal nodes, plus the treatment."""
    return descendants(p.graph, causal_nodes(p)) | {p.treatment}


def proper_backdoor(p):
    """The graph with the first edge of every causal path from treatment to outcome removed.

    That first edge is ``A -> C`` exactly when the child ``C`` is a causal node.
    """
    cn = causal_nodes(p)
    a = p.treatment
    first = {(a, c) for c in children(p.graph, a) if c in cn}
    return DirectedGraph(vertices=p.graph.vertices, edges=p.graph.edges - first)


def moralize(g):
    """Moral graph of a DAG: drop directions and marry every pair of parents sharing a child.

    >>> m = moralize(DirectedGraph(edges={('U', 'C'), ('W', 'C')}))
    >>> m.edge_list()
    [('C', 'U'), ('C', 'W'), ('U', 'W')]
    """
    m = nx.moral_graph(g.nxg)
    return UndirectedGraph(vertices=g.vertices, edges=frozenset(m.edges()))


def ignore_set(p):
    """Ancestral vertices other than A and Y that are latent or forbidden."""
    core = p.relevant - {p.treatment, p.outcome}
    return core & (p.latent | forbidden(p))


def project_out(h, drop):
    """Latent projection of an undirected graph: remove `drop`, keep connectivity through it.

    Two remaining vertices become adjacent when they were adjacent in `h` or
    joined by a path whose interior lies entirely in `drop`. Each connected
    piece of `drop` therefore turns its boundary into a clique.

    Parameters
    ----------
    h : UndirectedGraph
    drop : iterable of str

    Returns
    -------
    UndirectedGraph
        graph on ``vertices(h) - drop``

    Examples
    --------
    >>> h = UndirectedGraph(edges={('A', 'U'), ('U', 'Y')})
    >>> project_out(h, {'U'}).edge_list()
    [('A', 'Y')]
    """
    drop = frozenset(drop)
    check_known(h, drop)
    keep = h.vertices - drop
    edges = {e for e in h.edges if e <= keep}
    for piece in nx.connected_components(h.nxg.subgraph(drop)):
        boundary = {w for v in piece for w in h.nxg.neighbors(v) if w not in drop}
        edges.update(frozenset(pair) for pair in itertools.combinations(sorted(boundary), 2))
    return UndirectedGraph(vertices=keep, edges=frozenset(edges))


def build_h1(p):
    """Construct the adjustment efficiency graph H1 of a causal problem.

    H0 is the moral graph of the proper back-door graph restricted to
    ``an_G({A, Y} | L)``. H1 is H0 with the :func:`ignore_set` projected out
    and every policy vertex joined to both treatment and outcome.

    Costs supplied for the treatment, the outcome, latent vertices or Ignore
    vertices are dropped with a :class:`~adjcut.errors.DiscardedCostWarning`.

    Parameters
    ----------
    p : CausalProblem

    Returns
    -------
    EfficiencyGraph
    """
    a, y = p.treatment, p.outcome
    h0 = moralize(induced_subgraph(proper_backdoor(p), p.relevant))
    ignore = ignore_set(p)
    h = project_out(h0, ignore)
    wired = {frozenset((a, w)) for w in p.policy} | {frozenset((y, w)) for w in p.policy}
    h1 = UndirectedGraph(vertices=h.vertices, edges=h.edges | wired)

    discarded = set(p.costs) & ({a, y} | ignore | p.latent)
    if discarded:
        warnings.warn('costs are not used for ' + format_set(discarded) + '; discarding them',
                      DiscardedCostWarning, stacklevel=2)

    candidates = h1.vertices - {a, y}
    e = EfficiencyGraph(h1=h1, treatment=a, outcome=y, policy=p.policy, ignore=ignore,
                        candidate_costs={w: p.cost(w) for w in candidates})
    logger.debug('built H1 with %d vertices and %d edges (ignored %s)',
                 len(h1.vertices), len(h1.edges), format_set(ignore))
    return e


def unit_costs(e):
    """the same efficiency graph with every candidate cost set to 1"""
    return replace(e, candidate_costs={w: Fraction(1) for w in e.candidates})


def dominates(e, z1, z2):
    """Graphical efficiency order between two separators of H1.

    ``z1`` dominates ``z2`` when the outcome is separated from ``z2 - z1`` by
    ``z1`` and the treatment is separated from ``z1 - z2`` by ``z2``. For two
    minimum cost adjustment sets this certifies that adjusting for ``z1``
    gives non-parametric estimators with asymptotic variance no larger than
    adjusting for ``z2``, for every law and treatment rule.

    Parameters
    ----------
    e : EfficiencyGraph
    z1, z2 : iterable of str
        Separators of ``e.h1``

    Returns
    -------
    bool

    Raises
    ------
    SeparatorError
        either argument is not a treatment-outcome separator

    Examples
    --------
    In the graph H1 with edges ``A - B, B - T, T - Y``:

    >>> e = EfficiencyGraph(UndirectedGraph(edges={('A', 'B'), ('B', 'T'), ('T', 'Y')}),
    ...                     'A', 'Y', candidate_costs={'B': 1, 'T': 1})
    >>> dominates(e, {'T'}, {'B'})
    True
    >>> dominates(e, {'B'}, {'T'})
    False
    """
    z1, z2 = frozenset(z1), frozenset(z2)
    for name, z in (('z1', z1), ('z2', z2)):
        if not e.is_separator(z):
            raise SeparatorError('{0} = {1} is not a treatment-outcome separator in H1'
                                 .format(name, format_set(z)))
    h = e.h1
    return (separates(h, {e.outcome}, z2 - z1, z1) and
            separates(h, {e.treatment}, z1 - z2, z2))


def h1_to_frame(e):
    """Tidy table of the vertices of H1.

    Returns
    -------
    pd.DataFrame
        One row per vertex (index ``vertex``, sorted) with columns ``role``
        (treatment, outcome, policy or candidate), ``cost`` (None for
        treatment and outcome), ``degree`` and ``neighbors`` (comma-separated)
    """
    rows = []
    for w in sorted(e.h1.vertices):
        if w == e.treatment:
            role = 'treatment'
        elif w == e.outcome:
            role = 'outcome'
        elif w in e.policy:
            role = 'policy'
        else:
            role = 'candidate'
        nbrs = e.h1.neighbors(w)
        rows.append((w, role, e.candidate_costs.get(w), len(nbrs), ','.join(nbrs)))
    df = pd.DataFrame(rows, columns=('vertex', 'role', 'cost', 'degree', 'neighbors'))
    return df.set_index('vertex')
