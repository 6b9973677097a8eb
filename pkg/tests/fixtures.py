"""Worked examples shared by the tests."""

import os

from adjcut.graphs import DirectedGraph
from adjcut.efficiency import CausalProblem

DATA = os.path.join(os.path.dirname(__file__), 'data')

POLICY_EDGES = {
    ('X', 'A'), ('K', 'A'), ('B', 'K'), ('Q', 'K'), ('A', 'M'), ('B', 'R'),
    ('Q', 'T'), ('R', 'Y'), ('T', 'Y'), ('M', 'Y'), ('U', 'Y'), ('U', 'F'),
}
POLICY_COSTS = {'X': 1, 'K': 4, 'B': 2, 'Q': 1, 'R': 1, 'T': 1, 'F': 1}
POLICY_H1_EDGES = {
    ('B', 'R'), ('B', 'Q'), ('B', 'K'), ('Q', 'K'), ('K', 'A'), ('K', 'X'),
    ('Q', 'T'), ('R', 'Y'), ('R', 'T'), ('T', 'Y'), ('X', 'A'), ('X', 'Y'),
}

BUDGET_EDGES = {('B', 'A'), ('Q', 'A'), ('B', 'T'), ('Q', 'R'), ('T', 'Y'), ('R', 'Y'), ('A', 'Y')}
BUDGET_COSTS = {'B': 1, 'Q': 1, 'T': 2, 'R': 2}
BUDGET_H1_EDGES = {
    ('B', 'A'), ('Q', 'A'), ('B', 'Q'), ('B', 'T'), ('Q', 'R'), ('T', 'Y'), ('T', 'R'), ('R', 'Y'),
}


def undirected(edges):
    return {frozenset(e) for e in edges}


def policy_problem(**costs):
    """treatment A, outcome Y, policy {X}, U latent; keyword arguments override costs"""
    g = DirectedGraph(edges=POLICY_EDGES)
    return CausalProblem(g, 'A', 'Y', policy={'X'}, observed=g.vertices - {'U'},
                         costs={**POLICY_COSTS, **costs})


def budget_problem(**costs):
    return CausalProblem(DirectedGraph(edges=BUDGET_EDGES), 'A', 'Y', costs={**BUDGET_COSTS, **costs})


def confounded():
    """A and Y share a latent parent, so no adjustment set exists"""
    g = DirectedGraph(edges={('A', 'Y'), ('U', 'A'), ('U', 'Y'), ('C', 'A'), ('C', 'Y')})
    return CausalProblem(g, 'A', 'Y', observed=g.vertices - {'U'}, costs={'C': 1})


def data_path(name):
    return os.path.join(DATA, name)
