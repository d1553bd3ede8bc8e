from fractions import Fraction

import pytest

from src.classes.base.count_result import SearchStatistics
from src.classes.counting.engine import CountingEngine
from src.classes.counting.solver_state import (
    Conflict,
    SolverState,
    leaf_value,
    split_components,
    unit_propagate,
)
from src.classes.counting.strategy import BranchStrategy
from src.classes.formula.cnf import Clause, WeightedFormula
from src.classes.oracle.brute_force import brute_force_count
from src.classes.ring.exact_ring import ExactRing
from src.utils.exceptions import BudgetExceededError, RuleNotApplicableError
from src.utils.generators import random_cnf, random_signed, random_weighted


def _state(formula):
    return SolverState.from_formula(formula, ExactRing(), SearchStatistics())


def test_leaf_multiplies_one_plus_weight_per_free_variable():
    result = CountingEngine().count(WeightedFormula(3, (), {1: 2, 2: -1}))
    assert result.count == 0
    result = CountingEngine().count(WeightedFormula(2, (), {1: 2}))
    assert result.count == 6


def test_leaf_value_requires_no_clauses(example):
    with pytest.raises(RuleNotApplicableError):
        leaf_value(_state(example))


def test_forced_true_variable_contributes_its_weight():
    formula = WeightedFormula.from_dimacs(2, [(1,)], {1: 5})
    assert CountingEngine().count(formula).count == 10


def test_unit_propagation_to_fixpoint():
    state = unit_propagate(_state(WeightedFormula.from_dimacs(3, [(1,), (-1, 2), (-2, 3)])))
    assert not isinstance(state, Conflict)
    assert state.clauses == ()
    assert state.trail == (1, 2, 3)
    assert state.statistics.propagations == 3


def test_complementary_units_conflict():
    assert isinstance(unit_propagate(_state(WeightedFormula.from_dimacs(1, [(1,), (-1,)]))), Conflict)
    assert CountingEngine().count(WeightedFormula.from_dimacs(1, [(1,), (-1,)])).count == 0


def test_empty_clause_counts_zero():
    assert CountingEngine().count(WeightedFormula(2, (Clause(),))).count == 0


def test_soft_unit_clause_is_not_propagated():
    formula = WeightedFormula(1, (Clause.from_dimacs((1,), label=3),), {1: 2})
    # x1 = 0 violates the clause (factor 3), x1 = 1 contributes w = 2
    assert CountingEngine().count(formula).count == 5


def test_components_multiply():
    formula = WeightedFormula.from_dimacs(5, [(1, 2), (3, 4)])
    result = CountingEngine(components=True).count(formula)
    assert result.count == 3 * 3 * 2
    assert result.statistics.components >= 2
    assert CountingEngine(components=False).count(formula).count == 18


def test_split_components_carries_isolated_variables_once():
    state = _state(WeightedFormula.from_dimacs(5, [(1, 2), (3, 4)], {5: 2}))
    parts = split_components(state)
    assert [sorted(part.variables) for part in parts] == [[1, 2], [3, 4]]
    assert parts[0].scalar == 3
    assert parts[1].scalar == 1


def test_node_cap_raises_budget_error(xor_formula):
    with pytest.raises(BudgetExceededError) as error:
        CountingEngine(node_cap=1).count(xor_formula)
    assert error.value.nodes == 2
    assert CountingEngine(node_cap=10).count(xor_formula).count == 4


def test_node_cap_must_be_positive():
    with pytest.raises(ValueError):
        CountingEngine(node_cap=0)


def test_complex_weights():
    result = CountingEngine().count(WeightedFormula.from_dimacs(2, [(1, 2)], {1: 1j}))
    assert result.ring.name == "complex"
    # 01 -> 1, 10 -> i, 11 -> i
    assert result.count == pytest.approx(1 + 2j)


def test_rational_weights_stay_exact():
    result = CountingEngine().count(WeightedFormula.from_dimacs(2, [(1, 2)], {1: Fraction(1, 2)}))
    assert result.count == 2
    assert isinstance(result.count, int)


@pytest.mark.parametrize("strategy", BranchStrategy.names())
@pytest.mark.parametrize("components", [True, False])
def test_every_strategy_agrees_with_oracle(rng, strategy, components):
    engine = CountingEngine(strategy=BranchStrategy.from_name(strategy), components=components)
    for _ in range(25):
        formula = random_cnf(rng, rng.randint(1, 9), rng.randint(1, 4), rng.uniform(0.2, 3.0))
        assert engine.count(formula).count == brute_force_count(formula)


def test_signed_and_weighted_instances_agree_with_oracle(rng):
    engine = CountingEngine()
    for _ in range(40):
        formula = random_cnf(rng, rng.randint(1, 8), rng.randint(1, 4), rng.uniform(0.2, 2.5))
        signed = random_signed(rng, formula)
        assert engine.count(signed).count == brute_force_count(signed)
        weighted = random_weighted(rng, formula)
        assert engine.count(weighted).count == brute_force_count(weighted)


def test_strategy_names_round_trip():
    for name in BranchStrategy.names():
        assert BranchStrategy.from_name(name).value == name
    with pytest.raises(ValueError):
        BranchStrategy.from_name("random")


def test_max_three_degree_prefers_three_clause_variables():
    state = _state(WeightedFormula.from_dimacs(5, [(1, 2), (1, 3), (1, 4), (2, 4, 5), (3, 4, 5)]))
    assert BranchStrategy.MAX_THREE_DEGREE.pick(state) == 4
    assert BranchStrategy.MAX_OCCURRENCE.pick(state) == 1
    assert BranchStrategy.FIRST_UNASSIGNED.pick(state) == 1
