from fractions import Fraction

import pytest

from src.classes.formula.cnf import Clause, WeightedFormula
from src.classes.oracle.brute_force import BruteForceCounter, brute_force_count, brute_force_parity_count
from src.utils.exceptions import OracleCapError, WeightedInputError
from src.utils.generators import random_cnf, random_signed


def test_worked_example_has_seven_models(example):
    assert brute_force_count(example) == 7


def test_clause_free_formula_counts_all_assignments():
    assert brute_force_count(WeightedFormula(3)) == 8
    assert brute_force_count(WeightedFormula(0)) == 1


def test_empty_clause_counts_zero():
    assert brute_force_count(WeightedFormula(2, (Clause(),))) == 0


def test_weighted_free_variables():
    formula = WeightedFormula(2, (), {1: 2, 2: Fraction(1, 2)})
    assert brute_force_count(formula) == Fraction(9, 2)


def test_complex_weights_use_complex_ring():
    result = BruteForceCounter().count(WeightedFormula(1, (), {1: 1j}))
    assert result.ring.name == "complex"
    assert result.count == pytest.approx(1 + 1j)


def test_cap_is_enforced():
    with pytest.raises(OracleCapError):
        brute_force_count(WeightedFormula(4), cap=3)


def test_parity_count_ignores_weights_and_uses_given_set():
    formula = WeightedFormula.from_dimacs(2, [(1, 2)])
    # models 01, 10, 11; parity of x1: +1 (01) -1 (10) -1 (11)
    assert brute_force_parity_count(formula, {1}) == -1
    assert brute_force_parity_count(formula, set()) == 3


def test_parity_count_defaults_to_negative_weights():
    formula = WeightedFormula.from_dimacs(2, [(1, 2)], {2: -1})
    assert brute_force_parity_count(formula) == brute_force_count(formula) == -1


def test_parity_count_rejects_soft_clauses():
    formula = WeightedFormula(1, (Clause.from_dimacs((1,), label=2),))
    with pytest.raises(WeightedInputError):
        brute_force_parity_count(formula)


def test_parity_count_needs_explicit_set_for_other_weights():
    formula = WeightedFormula.from_dimacs(2, [(1, 2)], {1: 2})
    with pytest.raises(WeightedInputError):
        brute_force_parity_count(formula)
    assert brute_force_parity_count(formula, {1}) == -1


def test_sign_flip_identity_on_random_formulas(rng):
    for _ in range(100):
        formula = random_cnf(rng, rng.randint(1, 10), 4, rng.uniform(0.2, 3.0))
        negatives = {variable for variable in range(1, formula.variable_count + 1) if rng.random() < 0.4}
        flipped = formula.with_weights({variable: -1 for variable in negatives})
        assert brute_force_count(flipped) == brute_force_parity_count(formula, negatives), (formula, negatives)
        signed = random_signed(rng, formula)
        assert brute_force_parity_count(signed) == brute_force_count(signed), signed
