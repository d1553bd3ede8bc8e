"""CNF data model shared by every counter: literals, labelled clauses and weighted formulas.

A clause contributes 1 to the product when satisfied and its ``label`` when violated, so a
hard clause is exactly the label-0 case. A variable contributes its weight when set true
and 1 when set false.
"""
from dataclasses import dataclass, field, replace
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from src.classes.base.base_ring import RingValue
from src.classes.ring.ring_selection import select_ring
from src.utils.exceptions import MalformedInstanceError, PartialAssignmentError


@dataclass(frozen=True, order=True)
class Literal:
    variable: int
    negated: bool = False

    def __post_init__(self):
        if not isinstance(self.variable, int) or self.variable < 1:
            raise MalformedInstanceError(f"variable index must be >= 1, got {self.variable!r}")

    @classmethod
    def from_dimacs(cls, code: int) -> "Literal":
        if code == 0:
            raise MalformedInstanceError("0 is not a literal")
        return cls(abs(code), code < 0)

    def to_dimacs(self) -> int:
        return -self.variable if self.negated else self.variable

    def negate(self) -> "Literal":
        return Literal(self.variable, not self.negated)

    def holds(self, value: bool) -> bool:
        return value != self.negated

    def __str__(self):
        return f"¬x{self.variable}" if self.negated else f"x{self.variable}"


@dataclass(frozen=True)
class Clause:
    literals: Tuple[Literal, ...] = ()
    label: RingValue = 0

    def __post_init__(self):
        object.__setattr__(self, "literals", tuple(self.literals))

    @classmethod
    def from_dimacs(cls, codes: Iterable[int], label: RingValue = 0) -> "Clause":
        return cls(tuple(Literal.from_dimacs(code) for code in codes), label)

    def to_dimacs(self) -> Tuple[int, ...]:
        return tuple(literal.to_dimacs() for literal in self.literals)

    @property
    def width(self) -> int:
        return len(self.literals)

    @property
    def is_hard(self) -> bool:
        return self.label == 0

    @property
    def variables(self) -> Tuple[int, ...]:
        return tuple(literal.variable for literal in self.literals)

    def is_tautology(self) -> bool:
        codes = set(self.to_dimacs())
        return any(-code in codes for code in codes)

    def is_satisfied(self, values: Mapping[int, bool]) -> bool:
        return any(literal.holds(values[literal.variable]) for literal in self.literals)

    def factor(self, values: Mapping[int, bool]) -> RingValue:
        return 1 if self.is_satisfied(values) else self.label

    def __str__(self):
        body = " ∨ ".join(str(literal) for literal in self.literals) or "⊥"
        return f"({body})" if self.is_hard else f"({body})[{self.label}]"


@dataclass(frozen=True)
class WeightedFormula:
    variable_count: int
    clauses: Tuple[Clause, ...] = ()
    weights: Mapping[int, RingValue] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.variable_count, int) or self.variable_count < 0:
            raise MalformedInstanceError(f"variable count must be >= 0, got {self.variable_count!r}")
        object.__setattr__(self, "clauses", tuple(self.clauses))
        weights: Dict[int, RingValue] = {}
        for variable, weight in dict(self.weights).items():
            if not 1 <= variable <= self.variable_count:
                raise MalformedInstanceError(
                    f"weight given for variable {variable}, but n = {self.variable_count}"
                )
            if weight == 0:
                raise MalformedInstanceError(f"weight of variable {variable} must be nonzero")
            if weight != 1:
                weights[variable] = weight
        object.__setattr__(self, "weights", MappingProxyType(dict(sorted(weights.items()))))
        for index, clause in enumerate(self.clauses, start=1):
            for literal in clause.literals:
                if literal.variable > self.variable_count:
                    raise MalformedInstanceError(
                        f"clause {index} references x{literal.variable}, but n = {self.variable_count}"
                    )

    @classmethod
    def from_dimacs(
        cls,
        variable_count: int,
        clauses: Iterable[Sequence[int]],
        weights: Optional[Mapping[int, RingValue]] = None,
    ) -> "WeightedFormula":
        return cls(
            variable_count,
            tuple(Clause.from_dimacs(codes) for codes in clauses),
            dict(weights or {}),
        )

    def weight(self, variable: int) -> RingValue:
        return self.weights.get(variable, 1)

    @property
    def clause_count(self) -> int:
        return len(self.clauses)

    @property
    def max_width(self) -> int:
        return max((clause.width for clause in self.clauses), default=0)

    @property
    def literal_count(self) -> int:
        return sum(clause.width for clause in self.clauses)

    @property
    def is_plain(self) -> bool:
        """#SAT instance: unit weights and hard clauses only."""
        return not self.weights and all(clause.is_hard for clause in self.clauses)

    @property
    def is_signed(self) -> bool:
        """#SAT± instance: weights in {1, -1} and hard clauses only."""
        return all(weight == -1 for weight in self.weights.values()) and all(
            clause.is_hard for clause in self.clauses
        )

    @property
    def negative_set(self) -> frozenset:
        return frozenset(variable for variable, weight in self.weights.items() if weight == -1)

    def with_weights(self, weights: Mapping[int, RingValue]) -> "WeightedFormula":
        return replace(self, weights=dict(weights))

    def with_clauses(self, clauses: Iterable[Clause]) -> "WeightedFormula":
        return replace(self, clauses=tuple(clauses))

    def __str__(self):
        return " ∧ ".join(str(clause) for clause in self.clauses) or "⊤"


@dataclass(frozen=True)
class Assignment:
    values: Mapping[int, bool] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "values", MappingProxyType(dict(self.values)))

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "Assignment":
        """``bits[0]`` is x1."""
        return cls({index: bool(bit) for index, bit in enumerate(bits, start=1)})

    def is_total(self, variable_count: int) -> bool:
        return all(variable in self.values for variable in range(1, variable_count + 1))


def normalize(formula: WeightedFormula) -> WeightedFormula:
    """Drop repeated literals and tautological clauses; the weighted count is unchanged."""
    clauses = []
    for clause in formula.clauses:
        literals = tuple(dict.fromkeys(clause.literals))
        for literal in literals:
            if literal.variable > formula.variable_count:
                raise MalformedInstanceError(
                    f"x{literal.variable} out of range for n = {formula.variable_count}"
                )
        reduced = Clause(literals, clause.label)
        if reduced.is_tautology():
            # satisfied under every assignment, factor 1 whatever the label
            continue
        clauses.append(reduced)
    return formula.with_clauses(clauses)


def evaluate(formula: WeightedFormula, assignment: Assignment) -> RingValue:
    if not assignment.is_total(formula.variable_count):
        raise PartialAssignmentError(
            f"assignment covers {len(assignment.values)} of {formula.variable_count} variables"
        )
    values = assignment.values
    value: RingValue = 1
    for variable in range(1, formula.variable_count + 1):
        if values[variable]:
            value = value * formula.weight(variable)
    for clause in formula.clauses:
        value = value * clause.factor(values)
        if value == 0:
            break
    return select_ring(formula).coerce(value)


def disjoint_conjunction(left: WeightedFormula, right: WeightedFormula) -> WeightedFormula:
    """``left ∧ right`` with the variables of ``right`` renumbered after those of ``left``."""
    offset = left.variable_count
    shifted = tuple(
        Clause(
            tuple(Literal(literal.variable + offset, literal.negated) for literal in clause.literals),
            clause.label,
        )
        for clause in right.clauses
    )
    weights = dict(left.weights)
    weights.update({variable + offset: weight for variable, weight in right.weights.items()})
    return WeightedFormula(offset + right.variable_count, left.clauses + shifted, weights)
