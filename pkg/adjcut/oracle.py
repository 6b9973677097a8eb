"""Brute-force reference answers and random instances for checking the optimizer at desk scale.

- Exhaustive enumeration (hard-capped, see :data:`MAX_CANDIDATES` and :data:`MAX_NODES`):
    + :func:`enumerate_separators`
    + :func:`enumerate_min_cuts`
- Instances:
    + :func:`random_instance`: seeded random causal problems
    + :func:`layered_instance`: seeded synthetic H1 for timing
- Timing:
    + :func:`benchmark`
    + :func:`scaling_slope`
"""

import time
import logging
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import pandas as pd
import networkx as nx

from .errors import AdjcutError, OracleLimitError, RetryBudgetError
from .graphs import DirectedGraph, UndirectedGraph, ancestors, descendants
from .efficiency import CausalProblem, EfficiencyGraph
from .flow import INFINITE, DEFAULT_SOLVER, cut_capacity
from .utils import format_cost, format_set

logger = logging.getLogger(__name__)

#: Largest number of candidate vertices :func:`enumerate_separators` will try subsets of.
MAX_CANDIDATES = 20

#: Largest flow network :func:`enumerate_min_cuts` will search.
MAX_NODES = 24


def _set_order(z):
    return (len(z), sorted(z))


@dataclass(frozen=True)
class SeparatorCatalog:
    """Every treatment-outcome separator of H1 that contains the policy vertices.

    All lists are ordered by size, then by sorted labels.

    Attributes
    ----------
    all_separators : list of frozenset
    minimal : list of frozenset
        Separators no proper subset of which separates
    minimum_cost : list of frozenset
    minimum_cardinality : list of frozenset
    min_cost_value : Fraction or None
        None when there is no separator
    costs : dict
        Cost of each candidate vertex
    """
    all_separators: list = field(default_factory=list)
    minimal: list = field(default_factory=list)
    minimum_cost: list = field(default_factory=list)
    minimum_cardinality: list = field(default_factory=list)
    min_cost_value: object = None
    costs: dict = field(default_factory=dict)

    def cost(self, z):
        return sum((self.costs[w] for w in z), Fraction(0))

    def to_frame(self):
        """Tidy table with one row per separator.

        Columns are ``set`` (formatted, e.g. ``{K, X}``), ``size``, ``cost``
        (exact string), ``minimal``, ``minimum_cost`` and ``minimum_cardinality``.
        """
        minimal = set(self.minimal)
        cheapest = set(self.minimum_cost)
        smallest = set(self.minimum_cardinality)
        rows = [(format_set(z), len(z), format_cost(self.cost(z)),
                 z in minimal, z in cheapest, z in smallest)
                for z in self.all_separators]
        return pd.DataFrame(rows, columns=['set', 'size', 'cost', 'minimal',
                                           'minimum_cost', 'minimum_cardinality'])


def enumerate_separators(e, max_vertices=MAX_CANDIDATES):
    """Check every subset of the candidate vertices of H1 that contains the policy vertices.

    Parameters
    ----------
    e : EfficiencyGraph
    max_vertices : int, default=20
        Refuse graphs with more candidate vertices than this

    Returns
    -------
    SeparatorCatalog

    Raises
    ------
    OracleLimitError
        H1 has more than `max_vertices` candidate vertices
    """
    candidates = e.candidates
    if len(candidates) > max_vertices:
        raise OracleLimitError('{0} candidate vertices exceed the oracle cap of {1}'
                               .format(len(candidates), max_vertices))
    a, y = e.treatment, e.outcome
    free = sorted(candidates - e.policy)
    h = e.h1.nxg

    separators = []
    for k in range(len(free) + 1):
        for extra in itertools.combinations(free, k):
            z = e.policy.union(extra)
            if not nx.has_path(h.subgraph(h.nodes - z), a, y):
                separators.append(z)
    separators.sort(key=_set_order)

    # removing a policy vertex always reopens the path through it, so only
    # the other members need checking
    found = set(separators)
    minimal = [z for z in separators if not any(z - {w} in found for w in z - e.policy)]

    catalog = SeparatorCatalog(costs=dict(e.candidate_costs))
    if not separators:
        return catalog
    best = min(catalog.cost(z) for z in separators)
    fewest = min(len(z) for z in separators)
    return SeparatorCatalog(
        all_separators=separators,
        minimal=minimal,
        minimum_cost=[z for z in separators if catalog.cost(z) == best],
        minimum_cardinality=[z for z in separators if len(z) == fewest],
        min_cost_value=best,
        costs=catalog.costs,
    )


def _infinite_closures(n):
    g = nx.DiGraph()
    g.add_nodes_from(n.graph)
    g.add_edges_from((u, v) for u, v, inf in n.graph.edges(data='infinite') if inf)
    fwd = {v: frozenset(nx.descendants(g, v) | {v}) for v in g}
    bwd = {v: frozenset(nx.ancestors(g, v) | {v}) for v in g}
    return fwd, bwd


def enumerate_min_cuts(n, max_nodes=MAX_NODES):
    """All minimum cuts of a flow network whose members are all reachable from the source inside the cut.

    Any cut can be shrunk to the part reachable from the source without
    raising its capacity, so these cuts attain the minimum capacity and
    correspond one-to-one to the minimum cost separators of H1. The search
    branches on each node joining or leaving the cut, keeps every finite cut
    closed under infinite arcs and prunes on the capacity already committed.

    Parameters
    ----------
    n : FlowNetwork
    max_nodes : int, default=24

    Returns
    -------
    list of Cut
        Sorted by size then members; empty when every cut has infinite
        capacity

    Raises
    ------
    OracleLimitError
        `n` has more than `max_nodes` nodes
    """
    if len(n.graph) > max_nodes:
        raise OracleLimitError('{0} network nodes exceed the oracle cap of {1}'
                               .format(len(n.graph), max_nodes))
    fwd, bwd = _infinite_closures(n)
    reachable = nx.descendants(n.graph, n.source) | {n.source}
    inside = fwd[n.source]
    outside = bwd[n.sink] | (n.nodes - reachable)
    if inside & outside:
        return []

    finite = [(u, v, k) for u, v, k in n.graph.edges(data='capacity')
              if not n.graph[u][v]['infinite']]
    order = sorted(n.nodes - inside - outside)
    best = [INFINITE]
    found = []

    def committed(s, x):
        return sum(k for u, v, k in finite if u in s and v in x)

    def search(s, x):
        bound = committed(s, x)
        if bound > best[0]:
            return
        rest = [v for v in order if v not in s and v not in x]
        if not rest:
            if nx.descendants(n.graph.subgraph(s), n.source) | {n.source} != s:
                return
            if bound < best[0]:
                best[0] = bound
                found.clear()
            found.append(s)
            return
        v = rest[0]
        if not (fwd[v] & x):
            search(s | fwd[v], x)
        if not (bwd[v] & s):
            search(s, x | bwd[v])

    search(inside, outside)
    cuts = [n.cut(s) for s in found]
    for c in cuts:
        assert cut_capacity(n, c) == best[0]
    return sorted(cuts, key=lambda c: _set_order([str(m) for m in c]))


def _labels(count, prefix='V'):
    width = max(2, len(str(count - 1)))
    return ['{0}{1:0{2}d}'.format(prefix, i, width) for i in range(count)]


def random_instance(seed, n_vertices, edge_prob, hidden_frac, cost_range,
                    policy_prob=0.2, max_retries=100):
    """Draw a random causal problem, deterministically from `seed`.

    Edges ``Vi -> Vj`` with ``i < j`` are drawn independently with probability
    `edge_prob`, so the labels ``V00, V01, ...`` are a topological order. The
    treatment is drawn among vertices with a proper descendant and the outcome
    among those descendants. A `hidden_frac` share of the remaining vertices is
    latent; each observed non-descendant of the treatment joins the policy set
    with probability `policy_prob`. Observed vertices that may appear in an
    adjustment set get integer costs drawn uniformly from `cost_range`.

    Draws that cannot form a problem (no edge leaves any vertex) are redrawn
    from the same generator, at most `max_retries` times.

    Parameters
    ----------
    seed : int
    n_vertices : int
        At least 3
    edge_prob, hidden_frac : float
        In ``[0, 1]``
    cost_range : (int, int)
        Inclusive bounds ``(lo, hi)`` with ``0 < lo <= hi``
    policy_prob : float, default=0.2
    max_retries : int, default=100

    Returns
    -------
    CausalProblem

    Raises
    ------
    RetryBudgetError
        no valid problem was drawn within `max_retries` attempts
    """
    lo, hi = cost_range
    if n_vertices < 3:
        raise AdjcutError('need at least 3 vertices, got {0}'.format(n_vertices))
    for name, x in (('edge_prob', edge_prob), ('hidden_frac', hidden_frac), ('policy_prob', policy_prob)):
        if not 0 <= x <= 1:
            raise AdjcutError('{0} must lie in [0, 1], got {1}'.format(name, x))
    if not 0 < lo <= hi:
        raise AdjcutError('cost range must satisfy 0 < lo <= hi, got ({0}, {1})'.format(lo, hi))

    rng = np.random.default_rng(seed)
    labels = _labels(n_vertices)
    for attempt in range(1, max_retries + 1):
        draws = np.triu(rng.random((n_vertices, n_vertices)) < edge_prob, k=1)
        edges = {(labels[i], labels[j]) for i, j in zip(*np.nonzero(draws))}
        g = DirectedGraph(vertices=labels, edges=edges)

        sources = [w for w in labels if len(descendants(g, {w})) > 1]
        if not sources:
            logger.debug('seed %s attempt %d: no vertex has a descendant, redrawing', seed, attempt)
            continue
        a = sources[rng.integers(len(sources))]
        below = sorted(descendants(g, {a}) - {a})
        y = below[rng.integers(len(below))]

        others = sorted(g.vertices - {a, y})
        n_hidden = int(round(hidden_frac * len(others)))
        hidden = {str(w) for w in rng.choice(others, size=n_hidden, replace=False)} if n_hidden else set()
        observed = g.vertices - hidden

        non_desc = sorted((g.vertices - descendants(g, {a})) & observed)
        policy = {w for w in non_desc if rng.random() < policy_prob}

        causal = (descendants(g, {a}) & ancestors(g, {y})) - {a}
        usable = sorted(observed - descendants(g, causal) - {a, y})
        costs = {w: int(rng.integers(lo, hi + 1)) for w in usable}

        logger.debug('seed %s: accepted attempt %d (A=%s, Y=%s, %d policy, %d hidden)',
                     seed, attempt, a, y, len(policy), len(hidden))
        return CausalProblem(g, a, y, policy=policy, observed=observed, costs=costs)
    raise RetryBudgetError(seed, max_retries)


def layered_instance(n_layers, width, degree=3, seed=0, cost_range=(1, 5)):
    """A seeded synthetic efficiency graph made of layers between treatment and outcome.

    The treatment is joined to every vertex of the first layer and the
    outcome to every vertex of the last; every vertex is joined to `degree`
    random vertices of the next layer. With the defaults the graph has about
    three edges per vertex.

    Parameters
    ----------
    n_layers, width : int
        ``n_layers * width`` candidate vertices
    degree : int, default=3
    seed : int, default=0
    cost_range : (int, int), default=(1, 5)

    Returns
    -------
    EfficiencyGraph
    """
    if n_layers < 1 or width < 1:
        raise AdjcutError('need at least one layer of width 1')
    rng = np.random.default_rng(seed)
    layers = [_labels(width, prefix='L{0:04d}_'.format(i)) for i in range(n_layers)]
    edges = {('A', w) for w in layers[0]} | {(w, 'Y') for w in layers[-1]}
    for here, there in zip(layers, layers[1:]):
        for w in here:
            for j in rng.choice(width, size=min(degree, width), replace=False):
                edges.add((w, there[j]))
    h = UndirectedGraph(edges=edges)
    lo, hi = cost_range
    costs = {w: int(c) for w, c in zip(itertools.chain(*layers),
                                       rng.integers(lo, hi + 1, size=n_layers * width))}
    return EfficiencyGraph(h, 'A', 'Y', candidate_costs=costs)


def benchmark(sizes, width=100, degree=3, seed=0, solver=DEFAULT_SOLVER):
    """Time :func:`adjcut.optimize.solve` on layered instances of growing size.

    Parameters
    ----------
    sizes : list of int
        Target numbers of candidate vertices; each is rounded to whole layers of `width`

    Returns
    -------
    pd.DataFrame
        One row per size with columns ``size``, ``vertices``, ``edges``,
        ``cost`` and ``seconds``
    """
    from .optimize import solve

    rows = []
    for size in sizes:
        e = layered_instance(max(1, size // width), width, degree=degree, seed=seed)
        start = time.perf_counter()
        result = solve(e, solver=solver)
        seconds = time.perf_counter() - start
        logger.info('%d vertices, %d edges: %.3f s', len(e.h1.vertices), len(e.h1.edges), seconds)
        rows.append((size, len(e.h1.vertices), len(e.h1.edges), format_cost(result.total_cost), seconds))
    return pd.DataFrame(rows, columns=['size', 'vertices', 'edges', 'cost', 'seconds'])


def scaling_slope(sizes, seconds):
    """Slope of a least-squares line through ``(log size, log seconds)``.

    >>> round(scaling_slope([1, 2, 4], [1.0, 4.0, 16.0]), 6)
    2.0
    """
    sizes = np.asarray(sizes, dtype=float)
    seconds = np.asarray(seconds, dtype=float)
    if len(sizes) < 2 or len(sizes) != len(seconds):
        raise AdjcutError('need at least two paired measurements')
    if (sizes <= 0).any() or (seconds <= 0).any():
        raise AdjcutError('sizes and timings must be positive')
    slope, _ = np.polyfit(np.log(sizes), np.log(seconds), 1)
    return float(slope)
