import pytest

from src.classes.counting.algorithms import (
    ALGORITHMS,
    cdp,
    cdp_3to2,
    cdp_to2,
    cdp_weighted,
    count,
    residual_formula,
)
from src.classes.base.count_result import SearchStatistics
from src.classes.counting.solver_state import SolverState, assign
from src.classes.formula.cnf import WeightedFormula
from src.classes.oracle.brute_force import brute_force_count
from src.classes.ring.exact_ring import ExactRing
from src.utils.exceptions import WeightedInputError, WrongAlgorithmError
from src.utils.generators import random_3cnf, random_cnf


@pytest.mark.parametrize("algorithm", sorted(ALGORITHMS))
def test_worked_example_under_every_algorithm(example, algorithm):
    result = count(example, algorithm)
    assert result.count == 7
    assert result.algorithm == algorithm


def test_unknown_algorithm():
    with pytest.raises(WrongAlgorithmError):
        count(WeightedFormula(1), "dpll")


@pytest.mark.parametrize("counter", [cdp, cdp_to2, cdp_3to2])
def test_plain_algorithms_reject_weights(counter):
    with pytest.raises(WeightedInputError):
        counter(WeightedFormula.from_dimacs(2, [(1, 2)], {1: -1}))


def test_three_to_two_rejects_wide_clauses():
    with pytest.raises(WrongAlgorithmError):
        cdp_3to2(WeightedFormula.from_dimacs(4, [(1, 2, 3, 4)]))


def test_signed_count_specialises_the_weighted_engine(example):
    plain = cdp(example)
    weighted = cdp_weighted(example)
    assert plain.count == weighted.count
    assert plain.statistics == weighted.statistics


def test_strategy_may_be_given_by_name(example):
    assert cdp(example, strategy="first-unassigned", components=False).count == 7


def test_cdp_and_cdp2_agree_with_oracle(rng):
    for _ in range(60):
        formula = random_cnf(rng, rng.randint(4, 10), rng.randint(1, 6), rng.uniform(0.2, 3.0))
        expected = brute_force_count(formula)
        assert cdp(formula).count == expected
        assert cdp_to2(formula).count == expected


def test_three_to_two_agrees_with_oracle_on_dense_3cnf(rng):
    for _ in range(30):
        formula = random_3cnf(rng, rng.randint(4, 11), rng.uniform(0.5, 3.0))
        assert cdp_3to2(formula).count == brute_force_count(formula)


def test_three_to_two_branches_while_dense(rng):
    formula = random_3cnf(rng, 10, 2.0)
    result = cdp_3to2(formula)
    assert result.statistics.branch_nodes >= 1
    assert result.count == brute_force_count(formula)


def test_residual_formula_renumbers_densely():
    formula = WeightedFormula.from_dimacs(4, [(1, 2, 3), (-2, 4)], {4: -1})
    state = assign(SolverState.from_formula(formula, ExactRing(), SearchStatistics()), 1)
    residual = residual_formula(state)
    assert residual.variable_count == 3
    assert [clause.to_dimacs() for clause in residual.clauses] == [(-1, 3)]
    assert dict(residual.weights) == {3: -1}
