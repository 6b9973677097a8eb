import itertools

import pytest
from hypothesis import given, strategies as st
import networkx as nx

from adjcut.graphs import *
from adjcut.errors import GraphError, CycleError, SeparatorError

from fixtures import POLICY_EDGES, POLICY_H1_EDGES
from strategies import dags, undirected_graphs

G1 = DirectedGraph(edges=POLICY_EDGES)
H1 = UndirectedGraph(edges=POLICY_H1_EDGES)


def test_directed_graph():
    g = DirectedGraph(vertices={'W'}, edges={('A', 'Y')})
    assert g.vertices == {'A', 'Y', 'W'}
    assert len(g) == 3
    assert DirectedGraph(edges=[('A', 'Y')]) == DirectedGraph(vertices={'A', 'Y'}, edges={('A', 'Y')})
    with pytest.raises(GraphError, match='self-loop'):
        DirectedGraph(edges={('A', 'A')})
    with pytest.raises(GraphError, match='invalid vertex label'):
        DirectedGraph(vertices={'not a label'})


def test_undirected_graph():
    h = UndirectedGraph(edges={('A', 'W'), ('W', 'A'), ('W', 'Y')})
    assert len(h.edges) == 2
    assert h.has_edge('W', 'A')
    assert not h.has_edge('A', 'Y')
    assert h.neighbors('W') == ['A', 'Y']
    assert h.edge_list() == [('A', 'W'), ('W', 'Y')]
    with pytest.raises(GraphError):
        UndirectedGraph(edges={('A', 'A')})
    with pytest.raises(GraphError, match='unknown vertex'):
        h.neighbors('Z')


def test_is_acyclic():
    assert is_acyclic(DirectedGraph(edges={('A', 'B'), ('B', 'C')}))
    assert not is_acyclic(DirectedGraph(edges={('A', 'B'), ('B', 'A')}))
    assert is_acyclic(G1)
    assert is_acyclic(DirectedGraph())


def test_find_cycle():
    assert find_cycle(G1) is None
    g = DirectedGraph(edges={('A', 'B'), ('B', 'C'), ('C', 'A'), ('C', 'D')})
    cycle = find_cycle(g)
    assert cycle[0] == cycle[-1]
    assert set(cycle) == {'A', 'B', 'C'}
    assert all((u, w) in g.edges for u, w in zip(cycle, cycle[1:]))
    with pytest.raises(CycleError) as info:
        check_acyclic(g)
    assert info.value.cycle == cycle
    assert 'not acyclic' in str(info.value)


def test_ancestors():
    g = DirectedGraph(edges={('A', 'Y')})
    assert ancestors(g, {'Y'}) == {'A', 'Y'}
    assert ancestors(g, {'A'}) == {'A'}
    assert ancestors(G1, {'A', 'Y', 'X'}) == G1.vertices - {'F'}
    assert ancestors(G1, set()) == set()
    with pytest.raises(GraphError, match="'Z'"):
        ancestors(G1, {'Z'})


def test_descendants():
    g = DirectedGraph(edges={('A', 'Y')})
    assert descendants(g, {'A'}) == {'A', 'Y'}
    assert descendants(G1, {'M'}) == {'M', 'Y'}
    assert descendants(G1, set()) == set()
    assert parents(G1, 'A') == {'X', 'K'}
    assert children(G1, 'U') == {'Y', 'F'}


def test_induced_subgraph():
    assert induced_subgraph(G1, G1.vertices) == G1
    assert induced_subgraph(G1, set()) == DirectedGraph()
    sub = induced_subgraph(G1, G1.vertices - {'F'})
    assert sub.vertices == G1.vertices - {'F'}
    assert sub.edges == G1.edges - {('U', 'F')}
    assert induced_subgraph(H1, {'A', 'K', 'X'}).edge_list() == [('A', 'K'), ('A', 'X'), ('K', 'X')]


def test_is_separator():
    assert not is_separator(UndirectedGraph(edges={('A', 'Y')}), 'A', 'Y', set())
    assert is_separator(H1, 'A', 'Y', {'X', 'T', 'R'})
    assert not is_separator(H1, 'A', 'Y', {'X', 'Q'})
    assert is_separator(UndirectedGraph(vertices={'A', 'Y'}), 'A', 'Y', set())
    with pytest.raises(SeparatorError):
        is_separator(H1, 'A', 'Y', {'A', 'X'})
    with pytest.raises(SeparatorError):
        is_separator(H1, 'A', 'A', set())
    with pytest.raises(GraphError):
        is_separator(H1, 'A', 'Y', {'Z'})


def test_is_minimal_separator():
    assert is_minimal_separator(H1, 'A', 'Y', {'X', 'T', 'R'})
    assert is_minimal_separator(H1, 'A', 'Y', {'X', 'K'})
    assert not is_minimal_separator(H1, 'A', 'Y', {'X', 'K', 'Q', 'R'})
    assert not is_minimal_separator(H1, 'A', 'Y', {'X'})
    assert is_minimal_separator(UndirectedGraph(vertices={'A', 'Y'}), 'A', 'Y', set())


def test_separating_path():
    assert separating_path(H1, 'A', 'Y', {'X', 'K'}) is None
    path = separating_path(H1, 'A', 'Y', {'X', 'Q'})
    assert path[0] == 'A' and path[-1] == 'Y'
    assert not set(path) & {'X', 'Q'}
    assert all(H1.has_edge(u, w) for u, w in zip(path, path[1:]))


def test_separates():
    assert separates(H1, {'Y'}, {'Q'}, {'X', 'T', 'R'})
    assert not separates(H1, {'Y'}, {'K'}, {'X', 'T'})
    assert separates(H1, {'A'}, set(), set())
    # a target inside the separator is blocked itself
    assert separates(H1, {'A'}, {'X'}, {'X', 'K'})


@given(dags())
def test_closures_match_networkx(g):
    for w in g.vertices:
        assert ancestors(g, {w}) == nx.ancestors(g.nxg, w) | {w}
        assert w in descendants(g, {w})
        for u in descendants(g, {w}):
            assert w in ancestors(g, {u})


@given(undirected_graphs())
def test_minimal_separator_subsets(h):
    z = h.vertices - {'A', 'Y'}
    if h.has_edge('A', 'Y'):
        assert not is_separator(h, 'A', 'Y', z)
        return
    assert is_separator(h, 'A', 'Y', z)
    # greedily drop vertices until minimal
    for w in sorted(z):
        if is_separator(h, 'A', 'Y', z - {w}):
            z = z - {w}
    assert is_minimal_separator(h, 'A', 'Y', z)
    assert separating_path(h, 'A', 'Y', z) is None


def subsets(vertices):
    vertices = sorted(vertices)
    for k in range(len(vertices) + 1):
        for z in itertools.combinations(vertices, k):
            yield set(z)


@given(undirected_graphs(), st.data())
def test_separator_superset(h, data):
    candidates = sorted(h.vertices - {'A', 'Y'})
    z = data.draw(st.sets(st.sampled_from(candidates))) if candidates else set()
    if not is_separator(h, 'A', 'Y', z):
        return
    for extra in subsets(set(candidates) - z):
        assert is_separator(h, 'A', 'Y', z | extra)


@given(dags(), st.data())
def test_induced_subgraph_idempotent(g, data):
    keep = data.draw(st.sets(st.sampled_from(sorted(g.vertices))))
    once = induced_subgraph(g, keep)
    assert induced_subgraph(once, keep) == once
    assert once.vertices == keep


@given(undirected_graphs(), st.data())
def test_induced_subgraph_idempotent_undirected(h, data):
    keep = data.draw(st.sets(st.sampled_from(sorted(h.vertices))))
    once = induced_subgraph(h, keep)
    assert induced_subgraph(once, keep) == once
    assert once.edges <= h.edges
