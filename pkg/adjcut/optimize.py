"""
Compute optimal minimum cost adjustment sets.

:func:`optimal_min_cost` builds H1, builds its flow network, computes a
maximum flow, collects the nodes reachable from the source by augmenting
paths and maps that cut back to a vertex set of H1. The result is a minimum
cost adjustment set that is at least as efficient as every other minimum cost
adjustment set. With unit costs (:func:`optimal_min_cardinality`) the same
pipeline yields the most efficient adjustment set of minimum cardinality.

Checking a given set:
    + :func:`validate_adjustment`
    + :func:`compare_adjustments`
Mapping between separators and cuts:
    + :func:`map_h`
    + :func:`map_d`
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx

from .errors import NoAdjustmentSetError, SeparatorError
from .efficiency import build_h1, unit_costs, dominates
from .flow import (INFINITE, DEFAULT_SOLVER, Cut, build_network, max_flow,
                   residual_reachable, crossing_arcs, cut_capacity, prime, double)
from .graphs import check_known, is_minimal_separator, separating_path
from .utils import format_cost, format_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AdjustmentResult:
    """Outcome of :func:`optimal_min_cost` and friends.

    Attributes
    ----------
    optimal_set : frozenset
        The optimal minimum cost adjustment set; empty when none exists
    total_cost : Fraction or None
        Cost of `optimal_set` in the caller's units; None when none exists
    min_cut : Cut
        The smallest minimum cut S_c of the flow network
    h1_size : tuple of int
        ``(vertices, edges)`` of H1
    flow_value : int
        Maximum flow value, in scaled integer units
    exists : bool
        False when no adjustment set exists within H1
    big_m : int
    solver : str
    """
    optimal_set: frozenset
    total_cost: Fraction
    min_cut: Cut
    h1_size: tuple
    flow_value: int
    exists: bool
    big_m: int = 0
    solver: str = DEFAULT_SOLVER

    def to_dict(self):
        """plain dict for JSON output; sets are sorted lists, the cost an exact decimal string"""
        return {
            'optimal_set': sorted(self.optimal_set),
            'total_cost': None if self.total_cost is None else format_cost(self.total_cost),
            'exists': self.exists,
            'h1_vertices': self.h1_size[0],
            'h1_edges': self.h1_size[1],
            'flow_value': self.flow_value,
            'min_cut': [str(node) for node in self.min_cut],
            'solver': self.solver,
        }

    def __str__(self):
        if not self.exists:
            return 'no adjustment set exists'
        return '{0}  cost {1}'.format(format_set(self.optimal_set), format_cost(self.total_cost))


@dataclass(frozen=True)
class ValidationReport:
    """Result of :func:`validate_adjustment`.

    ``valid`` and ``minimal`` are None when the set could not be checked.
    """
    adjustment_set: frozenset
    checkable: bool
    valid: bool = None
    minimal: bool = None
    cost: Fraction = None
    witness: list = field(default_factory=list)
    reason: str = ''

    def to_dict(self):
        return {
            'set': sorted(self.adjustment_set),
            'checkable': self.checkable,
            'valid': self.valid,
            'minimal': self.minimal,
            'cost': None if self.cost is None else format_cost(self.cost),
            'witness': list(self.witness),
            'reason': self.reason,
        }

    def __str__(self):
        if not self.checkable:
            return 'not checkable: ' + self.reason
        if not self.valid:
            s = 'invalid'
            if self.witness:
                s += '; open path ' + ' - '.join(self.witness)
            if self.reason:
                s += '; ' + self.reason
            return s
        return '{0}, {1}, cost {2}'.format('valid', 'minimal' if self.minimal else 'not minimal',
                                          format_cost(self.cost))


def map_h(n, s):
    """Vertices of H1 whose internal arc leaves the cut `s`.

    Raises
    ------
    NoAdjustmentSetError
        `s` has infinite capacity, so it corresponds to no separator
    """
    if cut_capacity(n, s) == INFINITE:
        raise NoAdjustmentSetError('cut {0} has no finite capacity; no valid adjustment set'.format(s))
    return frozenset(u.vertex for u, v in crossing_arcs(n, s) if u.vertex == v.vertex)


def map_d(e, z, n=None):
    """Cut of the flow network corresponding to a minimal separator of H1.

    The cut is ``Y''`` plus every node lying on a directed walk from ``Y''``
    to some ``W'`` with ``W`` in `z` that avoids both halves of every other
    member of `z`. Its crossing arcs are exactly the internal arcs of `z`.
    The empty separator maps to everything reachable from ``Y''``.

    Parameters
    ----------
    e : EfficiencyGraph
    z : iterable of str
        A minimal treatment-outcome separator of ``e.h1``
    n : FlowNetwork, optional
        Network of `e`; built when not given

    Returns
    -------
    Cut
    """
    z = frozenset(z)
    if not is_minimal_separator(e.h1, e.treatment, e.outcome, z):
        raise SeparatorError('{0} is not a minimal treatment-outcome separator in H1'.format(format_set(z)))
    if n is None:
        n = build_network(e)
    if not z:
        return n.cut(nx.descendants(n.graph, n.source) | {n.source})
    members = {n.source}
    for w in sorted(z):
        blocked = {prime(u) for u in z - {w}} | {double(u) for u in z}
        allowed = n.graph.subgraph(n.nodes - blocked)
        reach = nx.descendants(allowed, n.source) | {n.source}
        if prime(w) not in reach:
            continue
        members |= reach & (nx.ancestors(allowed, prime(w)) | {prime(w)})
    return n.cut(members)


def solve(e, solver=DEFAULT_SOLVER):
    """Optimal minimum cost adjustment set of an already built efficiency graph.

    Parameters
    ----------
    e : EfficiencyGraph
    solver : str, default='preflow_push'
        See :data:`adjcut.flow.SOLVERS`

    Returns
    -------
    AdjustmentResult
    """
    n = build_network(e)
    f = max_flow(n, solver=solver)
    s = residual_reachable(n, f)
    size = (len(e.h1.vertices), len(e.h1.edges))
    logger.debug('S_c has %d of %d nodes', len(s), len(n.graph))

    if f.value >= n.big_m:
        logger.info('no adjustment set exists: flow %d reaches big M %d', f.value, n.big_m)
        return AdjustmentResult(optimal_set=frozenset(), total_cost=None, min_cut=s, h1_size=size,
                                flow_value=f.value, exists=False, big_m=n.big_m, solver=solver)

    z = map_h(n, s)
    total = e.cost(z)
    assert total * n.scale == f.value, (
        'cost of {0} does not match the flow value {1}'.format(format_set(z), f.value))
    return AdjustmentResult(optimal_set=z, total_cost=total, min_cut=s, h1_size=size,
                            flow_value=f.value, exists=True, big_m=n.big_m, solver=solver)


def optimal_min_cost(p, solver=DEFAULT_SOLVER):
    """Optimal minimum cost adjustment set of a causal problem.

    Parameters
    ----------
    p : CausalProblem
    solver : str, default='preflow_push'

    Returns
    -------
    AdjustmentResult
        ``exists`` is False when no adjustment set made of observed
        variables exists; this is an answer, not an error

    Examples
    --------
    >>> from adjcut.graphs import DirectedGraph
    >>> from adjcut.efficiency import CausalProblem
    >>> g = DirectedGraph(edges={('B', 'A'), ('Q', 'A'), ('B', 'T'), ('Q', 'R'),
    ...                          ('T', 'Y'), ('R', 'Y'), ('A', 'Y')})
    >>> p = CausalProblem(g, 'A', 'Y', costs={'B': 1, 'Q': 1, 'T': 2, 'R': 2})
    >>> print(optimal_min_cost(p))
    {B, Q}  cost 2
    """
    return solve(build_h1(p), solver=solver)


def optimal_min_cardinality(p, solver=DEFAULT_SOLVER):
    """Most efficient adjustment set among those of minimum cardinality; costs in `p` are ignored."""
    return solve(unit_costs(build_h1(p)), solver=solver)


def validate_adjustment(p, z):
    """Check a candidate adjustment set against H1.

    A set is checked only inside the H1 candidate universe; sets reaching
    outside it are reported as not checkable rather than guessed at.

    Parameters
    ----------
    p : CausalProblem
    z : iterable of str

    Returns
    -------
    ValidationReport
    """
    z = frozenset(z)
    check_known(p.graph, z)
    e = build_h1(p)
    a, y = p.treatment, p.outcome
    roles = z & {a, y}
    if roles:
        return ValidationReport(z, checkable=True, valid=False,
                                reason='contains treatment or outcome ' + format_set(roles))
    latent = z & p.latent
    if latent:
        return ValidationReport(z, checkable=True, valid=False,
                                reason='contains unobserved ' + format_set(latent))
    missing = p.policy - z
    if missing:
        return ValidationReport(z, checkable=True, valid=False,
                                reason='misses policy variables ' + format_set(missing))
    outside = z - e.candidates
    if outside:
        return ValidationReport(z, checkable=False,
                                reason=format_set(outside) + ' outside the H1 candidate universe')

    witness = separating_path(e.h1, a, y, z)
    cost = e.cost(z)
    if witness is not None:
        return ValidationReport(z, checkable=True, valid=False, minimal=False, cost=cost, witness=witness)
    minimal = is_minimal_separator(e.h1, a, y, z)
    return ValidationReport(z, checkable=True, valid=True, minimal=minimal, cost=cost)


def compare_adjustments(p, z1, z2):
    """Compare two adjustment sets under the graphical efficiency order of H1.

    Returns
    -------
    str
        ``'equivalent'`` if each dominates the other, ``'first'`` if only
        `z1` dominates, ``'second'`` if only `z2` dominates, otherwise
        ``'incomparable'``
    """
    e = build_h1(p)
    forward, backward = dominates(e, z1, z2), dominates(e, z2, z1)
    if forward and backward:
        return 'equivalent'
    if forward:
        return 'first'
    if backward:
        return 'second'
    return 'incomparable'
