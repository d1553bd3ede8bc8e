from collections import Counter
from enum import Enum
from typing import Optional

from src.classes.counting.solver_state import SolverState


class BranchStrategy(Enum):
    MAX_OCCURRENCE = "max-occurrence"
    MAX_DEGREE_SHORTEST_CLAUSE = "max-degree-shortest-clause"
    MAX_THREE_DEGREE = "max-3-degree"
    FIRST_UNASSIGNED = "first-unassigned"

    @classmethod
    def from_name(cls, name: str) -> "BranchStrategy":
        for strategy in cls:
            if strategy.value == name or strategy.name == name.upper():
                return strategy
        raise ValueError(f"unknown branching strategy '{name}'")

    @classmethod
    def names(cls):
        return [strategy.value for strategy in cls]

    def pick(self, state: SolverState) -> Optional[int]:
        """Variable to branch on; ties go to the lowest index. None when no clause remains."""
        occurrences = state.occurrences()
        if not occurrences:
            return None
        if self is BranchStrategy.FIRST_UNASSIGNED:
            return min(occurrences)
        if self is BranchStrategy.MAX_DEGREE_SHORTEST_CLAUSE:
            shortest = min(len(literals) for literals, _ in state.clauses)
            candidates = {abs(code) for literals, _ in state.clauses
                          if len(literals) == shortest for code in literals}
            return _argmax(occurrences, candidates)
        if self is BranchStrategy.MAX_THREE_DEGREE:
            three_degree = Counter(abs(code) for literals, _ in state.clauses
                                   if len(literals) == 3 for code in literals)
            if three_degree:
                return _argmax(three_degree, three_degree.keys())
        return _argmax(occurrences, occurrences.keys())


def _argmax(scores: Counter, candidates) -> int:
    return min(candidates, key=lambda variable: (-scores[variable], variable))
