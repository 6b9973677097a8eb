"""
Directed and undirected graph values, with the closure and separation
primitives the rest of the package is built on.

Graphs are immutable: :class:`DirectedGraph` and :class:`UndirectedGraph` are
frozen value objects keyed by string labels. Algorithms run on a frozen
:mod:`networkx` view built once per graph (:attr:`DirectedGraph.nxg`), with
vertices and edges inserted in sorted label order so every traversal is
deterministic.

- Directed graphs:
    + :func:`is_acyclic`, :func:`find_cycle`
    + :func:`ancestors`, :func:`descendants`, :func:`parents`, :func:`children`
    + :func:`induced_subgraph`
- Undirected graphs:
    + :func:`is_separator`, :func:`is_minimal_separator`
    + :func:`separates` (set-to-set separation)
    + :func:`separating_path` (witness path avoiding a set)
"""

from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from .errors import GraphError, CycleError, SeparatorError
from .utils import check_labels


@dataclass(frozen=True)
class DirectedGraph:
    """A finite directed graph without self-loops.

    Endpoints of `edges` are added to `vertices` automatically, so a graph can
    be given by its edge list alone.

    Parameters
    ----------
    vertices : iterable of str
    edges : iterable of (str, str)
        Directed edges ``(U, W)`` meaning ``U -> W``
    """
    vertices: frozenset = field(default_factory=frozenset)
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        edges = frozenset((u, w) for u, w in self.edges)
        vertices = frozenset(self.vertices).union(*edges)
        check_labels(vertices)
        for u, w in edges:
            if u == w:
                raise GraphError('self-loop on vertex {0!r}'.format(u))
        object.__setattr__(self, 'vertices', vertices)
        object.__setattr__(self, 'edges', edges)

    @cached_property
    def nxg(self):
        g = nx.DiGraph()
        g.add_nodes_from(sorted(self.vertices))
        g.add_edges_from(sorted(self.edges))
        return nx.freeze(g)

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class UndirectedGraph:
    """A finite undirected graph without self-loops.

    Edges may be given as any 2-element iterables; ``(U, W)`` and ``(W, U)``
    denote the same edge and are stored as ``frozenset({U, W})``.
    """
    vertices: frozenset = field(default_factory=frozenset)
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        edges = set()
        for e in self.edges:
            e = frozenset(e)
            if len(e) != 2:
                raise GraphError('self-loop or malformed edge {0!r}'.format(sorted(e)))
            edges.add(e)
        edges = frozenset(edges)
        vertices = frozenset(self.vertices).union(*edges)
        check_labels(vertices)
        object.__setattr__(self, 'vertices', vertices)
        object.__setattr__(self, 'edges', edges)

    @cached_property
    def nxg(self):
        g = nx.Graph()
        g.add_nodes_from(sorted(self.vertices))
        g.add_edges_from(sorted(tuple(sorted(e)) for e in self.edges))
        return nx.freeze(g)

    def __len__(self):
        return len(self.vertices)

    def has_edge(self, u, w):
        return frozenset((u, w)) in self.edges

    def neighbors(self, w):
        """sorted list of the neighbors of `w`"""
        check_known(self, [w])
        return sorted(self.nxg.neighbors(w))

    def edge_list(self):
        """sorted list of edges as ``(U, W)`` tuples with ``U < W``"""
        return sorted(tuple(sorted(e)) for e in self.edges)


def check_known(g, labels):
    """Raise :class:`GraphError` naming the first label of `labels` not in `g`."""
    unknown = sorted(set(labels) - g.vertices)
    if unknown:
        raise GraphError('unknown vertex {0!r}'.format(unknown[0]))


def is_acyclic(g):
    """True iff the directed graph `g` has no directed cycle."""
    return nx.is_directed_acyclic_graph(g.nxg)


def find_cycle(g):
    """Return one directed cycle of `g` as a list of labels (first label repeated at the end), or None."""
    try:
        arcs = nx.find_cycle(g.nxg, orientation='original')
    except nx.NetworkXNoCycle:
        return None
    return [u for u, _, _ in arcs] + [arcs[0][0]]


def check_acyclic(g):
    """Raise :class:`CycleError` if `g` has a directed cycle."""
    cycle = find_cycle(g)
    if cycle is not None:
        raise CycleError(cycle)


def ancestors(g, s):
    """Ancestors of every vertex in `s`, each vertex counting as its own ancestor.

    Parameters
    ----------
    g : DirectedGraph
    s : iterable of str

    Returns
    -------
    frozenset
        All ``U`` with a directed path ``U -> ... -> W`` for some ``W`` in
        `s`, including `s` itself

    Examples
    --------
    >>> g = DirectedGraph(edges={('A', 'Y')})
    >>> sorted(ancestors(g, {'Y'}))
    ['A', 'Y']
    >>> sorted(ancestors(g, {'A'}))
    ['A']
    """
    s = frozenset(s)
    check_known(g, s)
    found = set(s)
    for w in s:
        found |= nx.ancestors(g.nxg, w)
    return frozenset(found)


def descendants(g, s):
    """Descendants of every vertex in `s`, including `s` itself. See :func:`ancestors`."""
    s = frozenset(s)
    check_known(g, s)
    found = set(s)
    for w in s:
        found |= nx.descendants(g.nxg, w)
    return frozenset(found)


def parents(g, w):
    check_known(g, [w])
    return frozenset(g.nxg.predecessors(w))


def children(g, w):
    check_known(g, [w])
    return frozenset(g.nxg.successors(w))


def induced_subgraph(g, keep):
    """Subgraph of `g` on the vertices `keep`, with every edge of `g` between them.

    Works for both :class:`DirectedGraph` and :class:`UndirectedGraph`.
    """
    keep = frozenset(keep)
    check_known(g, keep)
    if isinstance(g, DirectedGraph):
        edges = (e for e in g.edges if e[0] in keep and e[1] in keep)
    else:
        edges = (e for e in g.edges if e <= keep)
    return type(g)(vertices=keep, edges=frozenset(edges))


def _check_endpoints(h, a, y, z):
    check_known(h, [a, y])
    check_known(h, z)
    if a == y:
        raise SeparatorError('endpoints must differ, both are {0!r}'.format(a))
    clash = sorted(z & {a, y})
    if clash:
        raise SeparatorError('separator may not contain endpoint {0!r}'.format(clash[0]))


def _without(h, z):
    return h.nxg.subgraph(h.vertices - z)


def is_separator(h, a, y, z):
    """True iff every path between `a` and `y` in `h` meets `z`.

    A pair that is already disconnected is separated by the empty set.

    Parameters
    ----------
    h : UndirectedGraph
    a, y : str
        Distinct endpoints
    z : iterable of str
        Candidate separator; may not contain `a` or `y`

    Examples
    --------
    >>> h = UndirectedGraph(edges={('A', 'W'), ('W', 'Y')})
    >>> is_separator(h, 'A', 'Y', {'W'})
    True
    >>> is_separator(h, 'A', 'Y', set())
    False
    """
    z = frozenset(z)
    _check_endpoints(h, a, y, z)
    return not nx.has_path(_without(h, z), a, y)


def is_minimal_separator(h, a, y, z):
    """True iff `z` separates `a` and `y` and no set ``z - {W}`` does."""
    z = frozenset(z)
    if not is_separator(h, a, y, z):
        return False
    return not any(is_separator(h, a, y, z - {w}) for w in z)


def separating_path(h, a, y, z):
    """A shortest path from `a` to `y` avoiding `z`, as a list of labels, or None if `z` separates."""
    z = frozenset(z)
    _check_endpoints(h, a, y, z)
    try:
        return nx.shortest_path(_without(h, z), a, y)
    except nx.NetworkXNoPath:
        return None


def separates(h, sources, targets, z):
    """Set-to-set separation: True iff every path from `sources` to `targets` meets `z`.

    Equivalent to attaching a virtual super-source to every vertex of
    `sources` and asking whether any vertex of `targets` stays reachable
    once `z` is removed. Members of `sources` or `targets` lying in `z` are
    blocked themselves; an empty `targets` is trivially separated.

    Parameters
    ----------
    h : UndirectedGraph
    sources, targets, z : iterable of str
    """
    sources, targets, z = frozenset(sources), frozenset(targets), frozenset(z)
    check_known(h, sources | targets | z)
    rest = _without(h, z)
    reached = set()
    for s in sorted(sources - z):
        if s not in reached:
            reached |= nx.node_connected_component(rest, s)
    return reached.isdisjoint(targets)
