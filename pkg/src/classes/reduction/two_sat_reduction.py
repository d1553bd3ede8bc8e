"""Linear-time reduction from #SAT to signed #2SAT.

Every clause (c_1 ∨ ... ∨ c_k) with k >= 3 is replaced by a fresh variable y of weight -1
and the k binary clauses (¬c_j ∨ ¬y). With the clause satisfied only y = 0 is allowed and
the pair sums to 1; with it violated both values of y are allowed and sum to 1 + (-1) = 0.
"""
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import List, Mapping, Optional, Tuple

from src.classes.bounds.instance_stats import InstanceStats
from src.classes.formula.cnf import Clause, Literal, WeightedFormula, normalize
from src.utils.exceptions import WeightedInputError
from src.utils.logger import get_logger

logger = get_logger(__name__)

FRESH_WEIGHT = -1


@dataclass(frozen=True)
class ReductionMap:
    original_n: int
    # original clause index (1-based) -> fresh variable y_i
    fresh_variables: Mapping[int, int] = field(default_factory=dict)
    # reduced clause index (1-based) -> (original clause index, literal index or None if copied)
    reduced_clause_origin: Mapping[int, Tuple[int, Optional[int]]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "fresh_variables", MappingProxyType(dict(self.fresh_variables)))
        object.__setattr__(self, "reduced_clause_origin", MappingProxyType(dict(self.reduced_clause_origin)))

    @property
    def negative_set(self) -> frozenset:
        return frozenset(self.fresh_variables.values())

    def comment_lines(self) -> List[str]:
        lines = [f"reduction original_n {self.original_n} fresh {len(self.fresh_variables)}"]
        lines.extend(f"reduction y {clause} {variable}" for clause, variable in self.fresh_variables.items())
        for reduced, (clause, literal) in self.reduced_clause_origin.items():
            origin = "copy" if literal is None else str(literal)
            lines.append(f"reduction origin {reduced} {clause} {origin}")
        return lines


def reduce_to_2sat_pm(formula: WeightedFormula) -> Tuple[WeightedFormula, ReductionMap]:
    if not formula.is_plain:
        raise WeightedInputError("the #2SAT± reduction is defined for plain #SAT instances")
    formula = normalize(formula)

    next_variable = formula.variable_count + 1
    fresh = {}
    origin = {}
    clauses: List[Clause] = []
    for clause_index, clause in enumerate(formula.clauses, start=1):
        if clause.width <= 2:
            clauses.append(clause)
            origin[len(clauses)] = (clause_index, None)
            continue
        y = next_variable
        next_variable += 1
        fresh[clause_index] = y
        not_y = Literal(y, negated=True)
        for literal_index, literal in enumerate(clause.literals, start=1):
            clauses.append(Clause((literal.negate(), not_y)))
            origin[len(clauses)] = (clause_index, literal_index)

    reduced = WeightedFormula(
        next_variable - 1,
        tuple(clauses),
        {variable: FRESH_WEIGHT for variable in fresh.values()},
    )
    logger.debug("reduced n=%d m=%d to n'=%d m'=%d",
                 formula.variable_count, formula.clause_count, reduced.variable_count, reduced.clause_count)
    return reduced, ReductionMap(formula.variable_count, fresh, origin)


def predict_reduced_size(stats: InstanceStats) -> Tuple[int, int]:
    """(variables, clauses) of the reduced instance: n + m3 and L3 + (m - m3) <= L."""
    return stats.n + stats.m3, stats.wide_literals + stats.narrow_clauses
