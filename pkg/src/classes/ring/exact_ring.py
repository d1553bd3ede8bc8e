from fractions import Fraction

from src.classes.base.base_ring import BaseRing, RingValue


def as_rational(value) -> Fraction:
    """Exact rational for ints, Fractions and complex values with zero imaginary part.

    Raises ValueError when the value has no exact rational form.
    """
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, complex):
        if value.imag != 0:
            raise ValueError(f"{value!r} is not real")
        value = value.real
    if isinstance(value, float):
        return Fraction(value)
    raise ValueError(f"{value!r} is not rational")


def is_rational(value) -> bool:
    try:
        as_rational(value)
    except ValueError:
        return False
    return True


class ExactRing(BaseRing):
    """Arbitrary-precision integers, widened to Fractions only when a division needs it."""

    name = "exact"

    def coerce(self, value: RingValue) -> RingValue:
        rational = as_rational(value)
        if rational.denominator == 1:
            return rational.numerator
        return rational

    def is_zero(self, value: RingValue) -> bool:
        return value == 0

    def equal(self, left: RingValue, right: RingValue) -> bool:
        return left == right

    def divide(self, numerator: RingValue, denominator: RingValue) -> RingValue:
        if denominator == 0:
            raise ZeroDivisionError("division by zero in exact ring")
        return self.coerce(Fraction(numerator) / Fraction(denominator))

    def format(self, value: RingValue) -> str:
        value = self.coerce(value)
        return str(value)
