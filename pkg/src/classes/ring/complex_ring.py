import cmath

from src.classes.base.base_ring import BaseRing, RingValue
from src.utils.config import Defaults


class ComplexRing(BaseRing):
    """Double-precision complex numbers compared with a relative tolerance."""

    name = "complex"

    def __init__(self, tolerance: float = Defaults.FLOAT_TOLERANCE):
        self.tolerance = tolerance

    def coerce(self, value: RingValue) -> RingValue:
        return complex(value)

    def is_zero(self, value: RingValue) -> bool:
        return abs(value) <= self.tolerance

    def equal(self, left: RingValue, right: RingValue) -> bool:
        scale = max(1.0, abs(left), abs(right))
        return abs(complex(left) - complex(right)) <= self.tolerance * scale

    def divide(self, numerator: RingValue, denominator: RingValue) -> RingValue:
        if self.is_zero(denominator):
            raise ZeroDivisionError("division by (near) zero in complex ring")
        return complex(numerator) / complex(denominator)

    def format(self, value: RingValue) -> str:
        return format_complex(complex(value), Defaults.OUTPUT_DIGITS)


def format_complex(value: complex, digits: int) -> str:
    """``re+imi`` with ``digits`` significant digits; negative zero is printed as 0."""
    real = _clean(value.real, digits)
    imag = _clean(value.imag, digits)
    sign = "-" if imag.startswith("-") else "+"
    return f"{real}{sign}{imag.lstrip('-')}i"


def _clean(part: float, digits: int) -> str:
    if part == 0 or cmath.isclose(part, 0.0, abs_tol=10.0 ** (-digits - 3)):
        return "0"
    return f"{part:.{digits}g}"
