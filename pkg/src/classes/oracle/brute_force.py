from itertools import product
from typing import Iterable, Optional

from src.classes.base.base_counter import BaseCounter
from src.classes.base.base_ring import RingValue
from src.classes.base.count_result import CountResult
from src.classes.formula.cnf import WeightedFormula
from src.classes.ring.ring_selection import select_ring
from src.utils.config import Defaults
from src.utils.exceptions import OracleCapError, WeightedInputError
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _check_cap(formula: WeightedFormula, cap: int) -> None:
    if formula.variable_count > cap:
        logger.warning("refusing to enumerate 2^%d assignments (cap %d)", formula.variable_count, cap)
        raise OracleCapError(
            f"n = {formula.variable_count} exceeds the enumeration cap {cap}; raise the cap explicitly"
        )


def _assignments(variable_count: int) -> Iterable[tuple]:
    # index 0 is x1, lexicographic with x1 most significant
    return product((False, True), repeat=variable_count)


class BruteForceCounter(BaseCounter):
    """Literal evaluation of the weighted sum over all 2^n assignments."""

    def __init__(self, cap: int = Defaults.ORACLE_CAP):
        self.cap = cap

    def count(self, formula: WeightedFormula) -> CountResult:
        _check_cap(formula, self.cap)
        ring = select_ring(formula)
        n = formula.variable_count
        weights = [formula.weight(variable) for variable in range(1, n + 1)]
        clauses = [(clause.to_dimacs(), clause.label) for clause in formula.clauses]

        total: RingValue = ring.zero()
        for bits in _assignments(n):
            value: RingValue = 1
            for clause, label in clauses:
                if not any(bits[abs(code) - 1] == (code > 0) for code in clause):
                    value = value * label
                    if value == 0:
                        break
            if value == 0:
                continue
            for index, bit in enumerate(bits):
                if bit:
                    value = value * weights[index]
            total = total + value
        logger.debug("brute force over %d assignments", 2 ** n)
        return CountResult(ring.coerce(total), ring, "oracle")


def brute_force_count(formula: WeightedFormula, cap: int = Defaults.ORACLE_CAP) -> RingValue:
    return BruteForceCounter(cap).count(formula).count


def brute_force_parity_count(
    formula: WeightedFormula,
    negative_set: Optional[Iterable[int]] = None,
    cap: int = Defaults.ORACLE_CAP,
) -> int:
    """Satisfying assignments of even N-parity minus those of odd N-parity.

    Only the Boolean function of the formula is consulted; its weights are ignored.
    ``negative_set`` defaults to the variables of weight -1, which needs a #SAT± instance.
    """
    if any(not clause.is_hard for clause in formula.clauses):
        raise WeightedInputError("parity counting needs hard clauses only")
    if negative_set is None and not formula.is_signed:
        raise WeightedInputError("weights outside {1, -1}: pass the negative set explicitly")
    _check_cap(formula, cap)
    negatives = formula.negative_set if negative_set is None else frozenset(negative_set)
    for variable in negatives:
        if not 1 <= variable <= formula.variable_count:
            raise WeightedInputError(f"x{variable} in N is out of range")
    negative_indices = [variable - 1 for variable in sorted(negatives)]
    clauses = [clause.to_dimacs() for clause in formula.clauses]

    even = odd = 0
    for bits in _assignments(formula.variable_count):
        if all(any(bits[abs(code) - 1] == (code > 0) for code in clause) for clause in clauses):
            if sum(bits[index] for index in negative_indices) % 2:
                odd += 1
            else:
                even += 1
    return even - odd
