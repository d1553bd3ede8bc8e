from fractions import Fraction

import pytest

from src.classes.formula.cnf import (
    Assignment,
    Clause,
    Literal,
    WeightedFormula,
    disjoint_conjunction,
    evaluate,
    normalize,
)
from src.classes.oracle.brute_force import brute_force_count
from src.utils.exceptions import MalformedInstanceError, PartialAssignmentError
from src.utils.generators import random_cnf, random_weighted

SOFT_LABELS = (0, 0, 2, Fraction(1, 2), -1)


def test_literal_rejects_nonpositive_variable():
    with pytest.raises(MalformedInstanceError):
        Literal(0)
    with pytest.raises(MalformedInstanceError):
        Literal.from_dimacs(0)


def test_literal_dimacs_codes():
    assert Literal.from_dimacs(-3) == Literal(3, negated=True)
    assert Literal(3, negated=True).negate().to_dimacs() == 3


def test_clause_out_of_range_is_rejected():
    with pytest.raises(MalformedInstanceError):
        WeightedFormula.from_dimacs(2, [(1, 3)])


def test_zero_weight_is_rejected():
    with pytest.raises(MalformedInstanceError):
        WeightedFormula.from_dimacs(2, [(1, 2)], {1: 0})


def test_unit_weights_are_not_stored():
    formula = WeightedFormula.from_dimacs(2, [(1, 2)], {1: 1, 2: -1})
    assert dict(formula.weights) == {2: -1}
    assert formula.is_signed
    assert not formula.is_plain
    assert formula.negative_set == frozenset({2})


def test_normalize_drops_repeats_and_tautologies():
    formula = WeightedFormula.from_dimacs(3, [(1, 1, 2), (1, -1, 3), (2, 3)])
    normalized = normalize(formula)
    assert [clause.to_dimacs() for clause in normalized.clauses] == [(1, 2), (2, 3)]
    assert brute_force_count(normalized) == brute_force_count(formula)


def test_normalize_drops_soft_tautology():
    formula = WeightedFormula(2, (Clause.from_dimacs((1, -1), label=5), Clause.from_dimacs((2,))))
    assert normalize(formula).clause_count == 1


def _with_repeats_and_tautologies(rng, formula):
    clauses = []
    for clause in formula.clauses:
        literals = clause.literals
        if literals and rng.random() < 0.5:
            literals = literals + (rng.choice(literals),)
        clauses.append(Clause(literals, rng.choice(SOFT_LABELS)))
    for _ in range(rng.randint(1, 3)):
        variable = rng.randint(1, formula.variable_count)
        literals = [Literal(variable), Literal(variable, negated=True)]
        if formula.variable_count > 1 and rng.random() < 0.5:
            literals.append(Literal(rng.randint(1, formula.variable_count), rng.random() < 0.5))
        rng.shuffle(literals)
        clauses.insert(rng.randint(0, len(clauses)), Clause(tuple(literals), rng.choice(SOFT_LABELS)))
    return formula.with_clauses(clauses)


def test_normalize_preserves_count_on_random_formulas(rng):
    for _ in range(100):
        base = random_weighted(rng, random_cnf(rng, rng.randint(1, 8), 4, rng.uniform(0.3, 2.0)),
                               weights=(Fraction(1, 2), 1, 2, -1))
        formula = _with_repeats_and_tautologies(rng, base)
        normalized = normalize(formula)
        assert brute_force_count(normalized) == brute_force_count(formula), formula
        assert all(not clause.is_tautology() for clause in normalized.clauses)
        assert all(len(set(clause.literals)) == clause.width for clause in normalized.clauses)
        assert normalize(normalized) == normalized


def test_example_shape(example):
    assert example.variable_count == 4
    assert example.clause_count == 4
    assert example.max_width == 3
    assert example.literal_count == 9
    assert example.is_plain


@pytest.mark.parametrize("bits, expected", [
    ((0, 0, 1, 0), 1),
    ((1, 1, 1, 1), 0),
    ((0, 1, 0, 1), 1),
    ((0, 1, 0, 0), 0),
])
def test_evaluate_plain(example, bits, expected):
    assert evaluate(example, Assignment.from_bits(bits)) == expected


def test_evaluate_multiplies_weights_of_true_variables():
    formula = WeightedFormula.from_dimacs(2, [(1, 2)], {1: 3, 2: Fraction(1, 2)})
    assert evaluate(formula, Assignment.from_bits((1, 1))) == Fraction(3, 2)
    assert evaluate(formula, Assignment.from_bits((1, 0))) == 3
    assert evaluate(formula, Assignment.from_bits((0, 0))) == 0


def test_evaluate_soft_clause_contributes_label_when_violated():
    formula = WeightedFormula(1, (Clause.from_dimacs((1,), label=5),))
    assert evaluate(formula, Assignment.from_bits((0,))) == 5
    assert evaluate(formula, Assignment.from_bits((1,))) == 1


def test_evaluate_rejects_partial_assignment(example):
    with pytest.raises(PartialAssignmentError):
        evaluate(example, Assignment({1: True, 2: False}))


def test_disjoint_conjunction_multiplies_counts(example):
    other = WeightedFormula.from_dimacs(2, [(1, 2)], {2: 2})
    joined = disjoint_conjunction(example, other)
    assert joined.variable_count == 6
    assert joined.weight(6) == 2
    assert brute_force_count(joined) == brute_force_count(example) * brute_force_count(other)
