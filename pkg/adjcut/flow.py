"""
The node-split flow network of an efficiency graph, its maximum flows and
minimum cuts.

Every vertex ``W`` of H1 becomes two nodes ``W'`` and ``W''`` joined by the
internal arc ``W' -> W''`` whose capacity is the cost of ``W``; every edge
``U - W`` of H1 becomes the external arcs ``U'' -> W'`` and ``W'' -> U'``.
Internal arcs of the treatment and outcome and all external arcs have
infinite capacity. The source is ``Y''`` and the sink is ``A'``.

Costs are scaled to integers by their least common denominator and infinite
capacities are materialized as :func:`big_m`, one more than the total
candidate cost, so every solver works on exact integers. Maximum flows come
from :mod:`networkx.algorithms.flow`; see :data:`SOLVERS`.
"""

import math
import logging
from dataclasses import dataclass
from typing import NamedTuple

import networkx as nx
from networkx.algorithms import flow as nxflow

from .errors import AdjcutError, FlowConsistencyError, GraphError
from .utils import scale_costs

logger = logging.getLogger(__name__)

#: Nominal capacity of arcs that may never be cut.
INFINITE = math.inf

PRIME = "'"
DOUBLE = "''"

#: Available max-flow solvers. All return a residual network carrying the
#: flow on each arc; any of them can be passed as ``solver=`` by name.
SOLVERS = {
    'preflow_push': nxflow.preflow_push,
    'shortest_augmenting_path': nxflow.shortest_augmenting_path,
    'edmonds_karp': nxflow.edmonds_karp,
    'dinitz': nxflow.dinitz,
    'boykov_kolmogorov': nxflow.boykov_kolmogorov,
}
DEFAULT_SOLVER = 'preflow_push'
REFERENCE_SOLVER = 'shortest_augmenting_path'


class SplitNode(NamedTuple):
    """One half of a split vertex: ``SplitNode('W', "'")`` is ``W'``."""
    vertex: str
    side: str

    def __str__(self):
        return self.vertex + self.side


def prime(w):
    return SplitNode(w, PRIME)


def double(w):
    return SplitNode(w, DOUBLE)


@dataclass(frozen=True)
class Cut:
    """A set of network nodes containing the source but not the sink."""
    members: frozenset

    def __contains__(self, node):
        return node in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __str__(self):
        return '{' + ', '.join(str(node) for node in self) + '}'


@dataclass(frozen=True)
class FlowNetwork:
    """Node-split flow network built by :func:`build_network`.

    Attributes
    ----------
    graph : networkx.DiGraph
        Frozen; every arc carries ``capacity`` (int, with infinite arcs
        materialized as `big_m`) and ``infinite`` (bool)
    source, sink : SplitNode
    big_m : int
    scale : int
        Multiplier that turned the candidate costs into integers
    """
    graph: nx.DiGraph
    source: SplitNode
    sink: SplitNode
    big_m: int
    scale: int

    @property
    def nodes(self):
        return frozenset(self.graph.nodes)

    def arcs(self):
        """sorted list of arcs ``(u, v)``"""
        return sorted(self.graph.edges)

    def origin(self, node):
        """``(vertex, side)`` of the H1 vertex a node was split from"""
        if node not in self.graph:
            raise GraphError('unknown network node {0}'.format(node))
        return node.vertex, node.side

    def capacity(self, u, v):
        """nominal capacity of arc ``u -> v``: an int, or INFINITE"""
        data = self.graph[u][v]
        return INFINITE if data['infinite'] else data['capacity']

    def cut(self, members):
        """validate `members` as a cut of this network"""
        members = frozenset(members)
        unknown = members - self.nodes
        if unknown:
            raise GraphError('unknown network node {0}'.format(min(unknown)))
        if self.source not in members or self.sink in members:
            raise AdjcutError('a cut must contain the source {0} and not the sink {1}'
                              .format(self.source, self.sink))
        return Cut(members)


@dataclass(frozen=True)
class FlowState:
    """A flow assignment on every arc of a network and its total value."""
    flow: dict
    value: int
    solver: str = DEFAULT_SOLVER


def big_m(e):
    """Finite stand-in for infinite capacity: 1 plus the total scaled candidate cost.

    >>> from adjcut.graphs import UndirectedGraph
    >>> from adjcut.efficiency import EfficiencyGraph
    >>> big_m(EfficiencyGraph(UndirectedGraph(edges={('A', 'W'), ('W', 'Y')}), 'A', 'Y',
    ...                       candidate_costs={'W': 5}))
    6
    """
    scaled, _ = scale_costs(e.candidate_costs)
    return 1 + sum(scaled.values())


def build_network(e):
    """Build the node-split flow network of an efficiency graph.

    The network has ``2 * |V(H1)|`` nodes and ``|V(H1)| + 2 * |E(H1)|`` arcs.

    Parameters
    ----------
    e : EfficiencyGraph

    Returns
    -------
    FlowNetwork
    """
    scaled, scale = scale_costs(e.candidate_costs)
    m = 1 + sum(scaled.values())

    d = nx.DiGraph()
    for w in sorted(e.h1.vertices):
        d.add_node(prime(w))
        d.add_node(double(w))
    for w in sorted(e.h1.vertices):
        if w in scaled:
            d.add_edge(prime(w), double(w), capacity=scaled[w], infinite=False)
        else:
            d.add_edge(prime(w), double(w), capacity=m, infinite=True)
    for u, w in e.h1.edge_list():
        d.add_edge(double(u), prime(w), capacity=m, infinite=True)
        d.add_edge(double(w), prime(u), capacity=m, infinite=True)

    n = FlowNetwork(graph=nx.freeze(d), source=double(e.outcome), sink=prime(e.treatment),
                    big_m=m, scale=scale)
    logger.debug('built flow network with %d nodes and %d arcs (big M = %d, scale = %d)',
                 d.number_of_nodes(), d.number_of_edges(), m, scale)
    return n


def max_flow(n, solver=DEFAULT_SOLVER):
    """Compute a maximum flow from ``Y''`` to ``A'``.

    Parameters
    ----------
    n : FlowNetwork
    solver : str, default='preflow_push'
        Name of a solver in :data:`SOLVERS`. The default is the highest-label
        preflow-push algorithm; ``'shortest_augmenting_path'`` is the usual
        reference for differential checks.

    Returns
    -------
    FlowState
        Integral flow on every arc of `n`
    """
    try:
        algorithm = SOLVERS[solver]
    except KeyError:
        raise AdjcutError('unknown solver {0!r}; choose one of {1}'
                          .format(solver, ', '.join(sorted(SOLVERS))))
    residual = algorithm(n.graph, n.source, n.sink, capacity='capacity')
    flow = {(u, v): residual[u][v]['flow'] for u, v in n.graph.edges}
    value = residual.graph['flow_value']
    logger.debug('%s: maximum flow value %d', solver, value)
    return FlowState(flow=flow, value=value, solver=solver)


def residual_reachable(n, f):
    """The cut S_c: the source plus every node reachable from it by augmenting paths.

    An arc can be followed forward while its flow is below capacity and
    backward while it carries flow. For a maximum flow this is the unique
    smallest minimum cut, whichever solver produced the flow.

    Raises
    ------
    FlowConsistencyError
        the sink is reachable, i.e. `f` is not a maximum flow
    """
    residual = nx.DiGraph()
    residual.add_nodes_from(n.graph)
    for u, v, k in n.graph.edges(data='capacity'):
        x = f.flow[(u, v)]
        if x < k:
            residual.add_edge(u, v)
        if x > 0:
            residual.add_edge(v, u)
    members = nx.descendants(residual, n.source) | {n.source}
    if n.sink in members:
        raise FlowConsistencyError('sink {0} is reachable by an augmenting path; '
                                   'the flow is not maximum'.format(n.sink))
    return Cut(frozenset(members))


def crossing_arcs(n, s):
    """sorted arcs leaving the cut `s`"""
    return sorted((u, v) for u, v in n.graph.edges if u in s and v not in s)


def cut_capacity(n, s):
    """Total nominal capacity of the arcs leaving `s`; INFINITE if any of them is infinite."""
    total = 0
    for u, v in crossing_arcs(n, s):
        k = n.capacity(u, v)
        if k == INFINITE:
            return INFINITE
        total += k
    return total


def is_feasible(n, f):
    """True iff `f` respects every capacity and is conserved at every inner node."""
    g = n.graph
    for (u, v), x in f.flow.items():
        if x < 0 or x > g[u][v]['capacity']:
            return False
    for node in g:
        if node in (n.source, n.sink):
            continue
        inflow = sum(f.flow[(u, node)] for u in g.predecessors(node))
        outflow = sum(f.flow[(node, v)] for v in g.successors(node))
        if inflow != outflow:
            return False
    return True


def is_saturated(n, f, s):
    """True iff every arc leaving `s` is saturated and every arc entering `s` is empty."""
    for u, v in n.graph.edges:
        if u in s and v not in s and f.flow[(u, v)] != n.graph[u][v]['capacity']:
            return False
        if u not in s and v in s and f.flow[(u, v)] != 0:
            return False
    return True
