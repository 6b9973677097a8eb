import time
from fractions import Fraction

import pytest

from adjcut.graphs import UndirectedGraph, is_minimal_separator
from adjcut.efficiency import EfficiencyGraph, build_h1
from adjcut.flow import build_network, max_flow, residual_reachable, crossing_arcs, prime, double, SOLVERS
from adjcut.optimize import *
from adjcut.errors import NoAdjustmentSetError, SeparatorError, GraphError

from fixtures import policy_problem, budget_problem, confounded


def test_optimal_min_cost_policy():
    start = time.perf_counter()
    result = optimal_min_cost(policy_problem())
    assert time.perf_counter() - start < 1
    assert result.exists
    assert result.optimal_set == {'X', 'T', 'R'}
    assert result.total_cost == 3
    assert result.flow_value == 3
    assert result.min_cut.members == {double('Y'), prime('X'), prime('T'), prime('R')}
    assert result.h1_size == (8, 12)
    assert result.big_m == 11
    assert str(result) == '{R, T, X}  cost 3'


def test_optimal_min_cost_policy_variant():
    result = optimal_min_cost(policy_problem(B=1, R=2))
    assert result.optimal_set == {'X', 'B', 'T'}
    assert result.total_cost == 3


def test_optimal_min_cardinality_policy():
    result = optimal_min_cardinality(policy_problem())
    assert result.optimal_set == {'X', 'K'}
    assert result.total_cost == 2
    assert compare_adjustments(policy_problem(), {'X', 'T', 'R'}, {'X', 'K'}) == 'first'


def test_budget_cost_versus_cardinality():
    p = budget_problem()
    result = optimal_min_cost(p)
    assert result.optimal_set == {'B', 'Q'}
    assert result.total_cost == 2
    assert optimal_min_cardinality(p).optimal_set == {'T', 'R'}
    assert compare_adjustments(p, {'T', 'R'}, {'B', 'Q'}) == 'first'
    assert compare_adjustments(p, {'B', 'Q'}, {'T', 'R'}) == 'second'
    assert compare_adjustments(p, {'B', 'R'}, {'T', 'Q'}) == 'incomparable'
    assert compare_adjustments(p, {'B', 'Q'}, {'B', 'Q'}) == 'equivalent'


def test_fractional_costs():
    result = optimal_min_cost(policy_problem(X='0.5', T='0.25', R='0.25', Q='0.1'))
    assert result.optimal_set == {'X', 'Q', 'R'}
    assert result.total_cost == Fraction(17, 20)
    assert result.to_dict()['total_cost'] == '0.85'


@pytest.mark.parametrize('solver', sorted(SOLVERS))
def test_solver_choice(solver):
    result = optimal_min_cost(policy_problem(), solver=solver)
    assert result.optimal_set == {'X', 'T', 'R'}
    assert result.solver == solver


def test_no_adjustment_set():
    result = optimal_min_cost(confounded())
    assert not result.exists
    assert result.optimal_set == set()
    assert result.total_cost is None
    assert result.flow_value >= result.big_m
    assert str(result) == 'no adjustment set exists'
    assert result.to_dict()['total_cost'] is None
    assert not optimal_min_cardinality(confounded()).exists


def test_empty_adjustment_set():
    e = EfficiencyGraph(UndirectedGraph(edges={('A', 'W'), ('V', 'Y')}), 'A', 'Y',
                        candidate_costs={'W': 1, 'V': 1})
    result = solve(e)
    assert result.exists
    assert result.optimal_set == set()
    assert result.total_cost == 0
    n = build_network(e)
    assert map_h(n, map_d(e, set(), n)) == set()


def test_to_dict():
    d = optimal_min_cost(policy_problem()).to_dict()
    assert d['optimal_set'] == ['R', 'T', 'X']
    assert d['total_cost'] == '3'
    assert d['exists'] is True
    assert d['h1_vertices'] == 8
    assert d['h1_edges'] == 12
    assert d['flow_value'] == 3
    assert d['min_cut'] == ["R'", "T'", "X'", "Y''"]


def test_map_h():
    e = build_h1(policy_problem())
    n = build_network(e)
    s = residual_reachable(n, max_flow(n))
    assert map_h(n, s) == {'X', 'T', 'R'}
    with pytest.raises(NoAdjustmentSetError):
        map_h(n, n.cut({double('Y')}))


def test_map_d():
    e = build_h1(policy_problem())
    n = build_network(e)
    assert map_d(e, {'X', 'T', 'R'}, n).members == {double('Y'), prime('X'), prime('T'), prime('R')}
    s = map_d(e, {'X', 'K'})
    assert crossing_arcs(n, s) == [(prime('K'), double('K')), (prime('X'), double('X'))]
    assert map_h(n, s) == {'X', 'K'}
    with pytest.raises(SeparatorError):
        map_d(e, {'X', 'K', 'Q'})
    with pytest.raises(SeparatorError):
        map_d(e, {'X'})


def test_map_d_round_trip():
    e = build_h1(budget_problem())
    n = build_network(e)
    for z in ({'B', 'Q'}, {'T', 'R'}, {'B', 'R'}, {'T', 'Q'}):
        s = map_d(e, z, n)
        assert is_minimal_separator(e.h1, 'A', 'Y', z)
        assert map_h(n, s) == z
        assert {(u.vertex, v.vertex) for u, v in crossing_arcs(n, s)} == {(w, w) for w in z}


def test_validate_adjustment():
    p = policy_problem()
    report = validate_adjustment(p, {'X', 'K'})
    assert report.checkable and report.valid and report.minimal
    assert report.cost == 5
    assert str(report) == 'valid, minimal, cost 5'

    report = validate_adjustment(p, {'X', 'K', 'Q'})
    assert report.valid and not report.minimal
    assert report.cost == 6

    report = validate_adjustment(p, {'X'})
    assert report.checkable and not report.valid
    h = build_h1(p).h1
    path = report.witness
    assert path[0] == 'A' and path[-1] == 'Y' and 'X' not in path
    assert all(h.has_edge(u, w) for u, w in zip(path, path[1:]))
    assert str(report).startswith('invalid; open path A - ')


def test_validate_adjustment_reasons():
    p = policy_problem()
    report = validate_adjustment(p, {'T', 'R'})
    assert not report.valid
    assert 'policy' in report.reason
    report = validate_adjustment(p, {'X', 'T', 'R', 'U'})
    assert not report.valid
    assert 'unobserved' in report.reason
    report = validate_adjustment(p, {'X', 'A'})
    assert not report.valid
    assert 'treatment or outcome' in report.reason
    report = validate_adjustment(p, {'X', 'T', 'R', 'M'})
    assert not report.checkable
    assert report.valid is None
    assert 'outside' in report.reason
    report = validate_adjustment(p, {'X', 'T', 'R', 'F'})
    assert not report.checkable
    with pytest.raises(GraphError):
        validate_adjustment(p, {'Z'})


def test_compare_adjustments_invalid():
    with pytest.raises(SeparatorError):
        compare_adjustments(budget_problem(), {'B'}, {'T', 'R'})
