import random

import pytest

from src.classes.formula.cnf import WeightedFormula

EXAMPLE_CLAUSES = [(-1, -2, -3), (2, 3), (-1, 3), (3, 4)]
EXAMPLE_TEXT = "p cnf 4 4\n-1 -2 -3 0\n2 3 0\n-1 3 0\n3 4 0\n"


@pytest.fixture
def example():
    """(¬x1 ∨ ¬x2 ∨ ¬x3)(x2 ∨ x3)(¬x1 ∨ x3)(x3 ∨ x4): 7 models."""
    return WeightedFormula.from_dimacs(4, EXAMPLE_CLAUSES)


@pytest.fixture
def example_text():
    return EXAMPLE_TEXT


@pytest.fixture
def xor_formula():
    """x1 ⊕ x2 ⊕ x3 = 1 as four 3-clauses; no unit propagation before two branches."""
    return WeightedFormula.from_dimacs(3, [(1, 2, 3), (-1, -2, 3), (1, -2, -3), (-1, 2, -3)])


@pytest.fixture
def rng():
    return random.Random(20240501)
