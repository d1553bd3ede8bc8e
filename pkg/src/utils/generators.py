# Seeded random instances for the property tests and the acceptance driver.
# Every generator takes a random.Random so a fixed seed reproduces the whole run.
import math
import random
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from src.classes.circuit.circuit import Circuit, Gate
from src.classes.formula.cnf import Clause, Literal, WeightedFormula

ABSORPTION_WEIGHTS = (Fraction(1, 2), 1, Fraction(3, 2), 2)


def random_clause(rng: random.Random, variable_count: int, width: int) -> Clause:
    variables = rng.sample(range(1, variable_count + 1), min(width, variable_count))
    return Clause(tuple(Literal(variable, rng.random() < 0.5) for variable in variables))


def random_cnf(rng: random.Random, variable_count: int, max_width: int, density: float,
               exact_width: bool = False) -> WeightedFormula:
    """round(density * n) clauses, each of width ``max_width`` or uniform in [1, max_width]."""
    clause_count = max(0, round(density * variable_count))
    clauses = []
    for _ in range(clause_count):
        width = max_width if exact_width else rng.randint(1, max_width)
        clauses.append(random_clause(rng, variable_count, width))
    return WeightedFormula(variable_count, tuple(clauses))


def random_3cnf(rng: random.Random, variable_count: int, density: float) -> WeightedFormula:
    return random_cnf(rng, variable_count, 3, density, exact_width=True)


def random_signed(rng: random.Random, formula: WeightedFormula) -> WeightedFormula:
    """Same clauses with a random negative set N (weight -1)."""
    negatives = [variable for variable in range(1, formula.variable_count + 1) if rng.random() < 0.5]
    return formula.with_weights({variable: -1 for variable in negatives})


def random_weighted(rng: random.Random, formula: WeightedFormula,
                    weights: Sequence = ABSORPTION_WEIGHTS) -> WeightedFormula:
    return formula.with_weights({
        variable: rng.choice(weights) for variable in range(1, formula.variable_count + 1)
    })


def random_circuit(rng: random.Random, qubit_count: int, gate_count: int,
                   kinds: Iterable[str] = ("h", "cz", "ckz", "rz"),
                   max_controls: Optional[int] = 2) -> Circuit:
    """Gates drawn uniformly from ``kinds``; C^kZ uses k = max_controls (a CCZ by default)."""
    kinds = [kind for kind in kinds if _fits(kind, qubit_count, max_controls)]
    gates = []
    for _ in range(gate_count if kinds else 0):
        kind = rng.choice(kinds)
        if kind == "h":
            gates.append(Gate.h(rng.randrange(qubit_count)))
        elif kind == "rz":
            gates.append(Gate.rz(rng.randrange(qubit_count), rng.uniform(0.0, 2 * math.pi)))
        elif kind == "cz":
            gates.append(Gate.cz(*rng.sample(range(qubit_count), 2)))
        else:
            gates.append(Gate.ckz(*rng.sample(range(qubit_count), max_controls + 1)))
    return Circuit(qubit_count, tuple(gates))


def _fits(kind: str, qubit_count: int, max_controls: Optional[int]) -> bool:
    if kind == "cz":
        return qubit_count >= 2
    if kind == "ckz":
        return max_controls is not None and max_controls >= 1 and qubit_count >= max_controls + 1
    return qubit_count >= 1
