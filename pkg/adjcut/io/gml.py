"""GML dumps of H1 and of its flow network, for viewing with external graph tools."""

from fractions import Fraction

import networkx as nx

from ..flow import INFINITE
from ..utils import format_cost


def h1_to_gml(e):
    """GML text of H1; each node carries its ``role`` and, for candidates, its ``cost``.

    Parameters
    ----------
    e : EfficiencyGraph

    Returns
    -------
    str
    """
    g = nx.Graph()
    for w in sorted(e.h1.vertices):
        if w == e.treatment:
            g.add_node(w, role='treatment')
        elif w == e.outcome:
            g.add_node(w, role='outcome')
        else:
            g.add_node(w, role='policy' if w in e.policy else 'candidate',
                       cost=format_cost(e.candidate_costs[w]))
    g.add_edges_from(e.h1.edge_list())
    return '\n'.join(nx.generate_gml(g)) + '\n'


def network_to_gml(n):
    """GML text of a flow network.

    Nodes are labelled ``W'`` and ``W''``. Each arc carries its scaled
    integer ``capacity``, an ``infinite`` flag and a ``label`` holding the
    capacity in cost units (``inf`` for infinite arcs).

    Parameters
    ----------
    n : FlowNetwork

    Returns
    -------
    str
    """
    g = nx.DiGraph(source=str(n.source), sink=str(n.sink), scale=n.scale)
    for node in sorted(n.nodes):
        g.add_node(str(node), vertex=node.vertex, side=node.side)
    for u, v in n.arcs():
        k = n.capacity(u, v)
        label = 'inf' if k == INFINITE else format_cost(Fraction(k, n.scale))
        g.add_edge(str(u), str(v), capacity=n.graph[u][v]['capacity'],
                   infinite=int(k == INFINITE), label=label)
    return '\n'.join(nx.generate_gml(g)) + '\n'
