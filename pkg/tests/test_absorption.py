from dataclasses import replace
from fractions import Fraction

import pytest

from src.classes.base.count_result import SearchStatistics
from src.classes.counting.algorithms import cdp_weighted
from src.classes.counting.solver_state import (
    SolverState,
    degree_one_candidates,
    eliminate_degree_one,
    leaf_value,
)
from src.classes.formula.cnf import WeightedFormula
from src.classes.oracle.brute_force import brute_force_count
from src.classes.ring.exact_ring import ExactRing
from src.utils.exceptions import RuleNotApplicableError
from src.utils.generators import random_cnf, random_weighted


def _state(formula):
    return SolverState.from_formula(formula, ExactRing(), SearchStatistics())


def _value(state):
    """Value of a state by enumerating its residual variables."""
    total = 0
    variables = sorted(state.variables)
    for mask in range(2 ** len(variables)):
        values = {variable: bool(mask >> index & 1) for index, variable in enumerate(variables)}
        term = state.scalar
        for variable, value in values.items():
            if value:
                term = term * state.weight(variable)
        for literals, label in state.clauses:
            if not any(values[abs(code)] == (code > 0) for code in literals):
                term = term * label
        total += term
    return total


def test_positive_occurrence_label():
    formula = WeightedFormula.from_dimacs(2, [(1, 2)], {1: Fraction(1, 2)})
    state = eliminate_degree_one(_state(formula), 1)
    assert state.scalar == Fraction(3, 2)
    assert state.clauses == (((2,), Fraction(1, 3)),)
    assert state.variables == frozenset({2})
    assert state.statistics.absorptions == 1
    assert _value(state) == brute_force_count(formula) == 2


def test_negative_occurrence_label():
    formula = WeightedFormula.from_dimacs(2, [(-1, 2)], {1: 2})
    state = eliminate_degree_one(_state(formula), 1)
    assert state.scalar == 3
    assert state.clauses == (((2,), Fraction(1, 3)),)
    assert _value(state) == brute_force_count(formula) == 4


def test_absorbing_the_last_literal_folds_the_label_into_the_scalar():
    formula = WeightedFormula.from_dimacs(1, [(1,)], {1: 2})
    state = eliminate_degree_one(_state(formula), 1)
    assert state.clauses == ()
    assert leaf_value(state) == 2


def test_rule_preconditions():
    state = _state(WeightedFormula.from_dimacs(3, [(1, 2), (1, 3)]))
    with pytest.raises(RuleNotApplicableError):
        eliminate_degree_one(state, 1)
    with pytest.raises(RuleNotApplicableError):
        eliminate_degree_one(replace(state, variables=frozenset({2, 3})), 1)


def test_weight_minus_one_is_not_a_candidate():
    state = _state(WeightedFormula.from_dimacs(3, [(1, 2), (2, 3)], {1: -1}))
    assert degree_one_candidates(state) == [3]
    with pytest.raises(RuleNotApplicableError):
        eliminate_degree_one(state, 1)


def test_engine_absorbs_and_matches(rng):
    formula = WeightedFormula.from_dimacs(4, [(1, 2, 3), (-3, 4)], {1: Fraction(3, 2), 4: 2})
    result = cdp_weighted(formula, absorb=True)
    assert result.statistics.absorptions > 0
    assert result.count == cdp_weighted(formula, absorb=False).count == brute_force_count(formula)


def test_absorption_preserves_random_weighted_counts(rng):
    for _ in range(60):
        formula = random_weighted(rng, random_cnf(rng, rng.randint(2, 9), rng.randint(1, 4), rng.uniform(0.2, 2.0)))
        absorbed = cdp_weighted(formula, absorb=True).count
        assert absorbed == cdp_weighted(formula, absorb=False).count
        assert absorbed == brute_force_count(formula)
