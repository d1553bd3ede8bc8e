from abc import ABC, abstractmethod

from src.classes.base.count_result import CountResult
from src.classes.formula.cnf import WeightedFormula


class BaseCounter(ABC):

    @abstractmethod
    def count(self, formula: WeightedFormula) -> CountResult:
        pass
