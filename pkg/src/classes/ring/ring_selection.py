from src.classes.base.base_ring import BaseRing
from src.classes.ring.complex_ring import ComplexRing
from src.classes.ring.exact_ring import ExactRing, is_rational


def select_ring(formula) -> BaseRing:
    """Exact arithmetic when every weight and label is rational, complex floats otherwise."""
    values = list(formula.weights.values()) + [clause.label for clause in formula.clauses]
    if all(is_rational(value) for value in values):
        return ExactRing()
    return ComplexRing()
