from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Dict, Optional

from src.classes.formula.cnf import WeightedFormula


@dataclass(frozen=True)
class InstanceStats:
    n: int
    m: int
    m3: int  # clauses of width >= 3
    max_width: int
    literals: int
    wide_literals: int  # literals inside clauses of width >= 3
    max_degree: int

    @property
    def defined(self) -> bool:
        return self.n > 0

    def _per_variable(self, value: int) -> Optional[Fraction]:
        return Fraction(value, self.n) if self.n else None

    @property
    def density(self) -> Optional[Fraction]:
        return self._per_variable(self.m)

    @property
    def density3(self) -> Optional[Fraction]:
        return self._per_variable(self.m3)

    @property
    def average_degree(self) -> Optional[Fraction]:
        return self._per_variable(self.literals)

    @property
    def narrow_clauses(self) -> int:
        return self.m - self.m3

    @property
    def three_degree_bound(self) -> Optional[int]:
        """d = ceil(3 * delta3), the 3-degree some variable is guaranteed to reach."""
        if self.density3 is None:
            return None
        return max(2, ceil(3 * self.density3))

    def as_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "m": self.m,
            "m3": self.m3,
            "k": self.max_width,
            "L": self.literals,
            "delta": _decimal(self.density),
            "delta3": _decimal(self.density3),
            "avg_degree": _decimal(self.average_degree),
            "max_degree": self.max_degree,
        }


def _decimal(value: Optional[Fraction], places: int = 4) -> str:
    return "undefined" if value is None else f"{float(value):.{places}f}"


def instance_stats(formula: WeightedFormula) -> InstanceStats:
    degrees = Counter()
    wide = wide_literals = 0
    for clause in formula.clauses:
        degrees.update(clause.variables)
        if clause.width >= 3:
            wide += 1
            wide_literals += clause.width
    return InstanceStats(
        n=formula.variable_count,
        m=formula.clause_count,
        m3=wide,
        max_width=formula.max_width,
        literals=formula.literal_count,
        wide_literals=wide_literals,
        max_degree=max(degrees.values(), default=0),
    )
