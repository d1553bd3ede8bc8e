from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Union

RingValue = Union[int, Fraction, complex]


class BaseRing(ABC):
    """Commutative ring the counting engine accumulates in."""

    name: str = "ring"

    @abstractmethod
    def coerce(self, value: RingValue) -> RingValue:
        pass

    @abstractmethod
    def is_zero(self, value: RingValue) -> bool:
        pass

    @abstractmethod
    def equal(self, left: RingValue, right: RingValue) -> bool:
        pass

    @abstractmethod
    def divide(self, numerator: RingValue, denominator: RingValue) -> RingValue:
        pass

    @abstractmethod
    def format(self, value: RingValue) -> str:
        pass

    def zero(self) -> RingValue:
        return self.coerce(0)

    def one(self) -> RingValue:
        return self.coerce(1)
