"""Closed rational intervals with exact endpoint arithmetic."""

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any, Optional, Union

from ..exactmath.polynomial import as_rational
from ..utils.errors import DenominatorStraddlesZero

Number = Union[int, Fraction]


@dataclass(frozen=True)
class RatInterval:
    """[lo, hi] with rational endpoints; lo == hi is an exact point."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_rational(self.lo))
        object.__setattr__(self, "hi", as_rational(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value: Number) -> "RatInterval":
        v = as_rational(value)
        return cls(v, v)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def contains(self, value: Union[Number, "RatInterval"]) -> bool:
        if isinstance(value, RatInterval):
            return self.lo <= value.lo and value.hi <= self.hi
        return self.lo <= value <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def is_positive(self) -> bool:
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0

    def sign(self) -> Optional[int]:
        """Certified sign, or None when the interval straddles zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def overlaps(self, other: "RatInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersect(self, other: "RatInterval") -> Optional["RatInterval"]:
        if not self.overlaps(other):
            return None
        return RatInterval(max(self.lo, other.lo), min(self.hi, other.hi))

    @staticmethod
    def _coerce(other: Any) -> Optional["RatInterval"]:
        if isinstance(other, RatInterval):
            return other
        if isinstance(other, (int, Fraction)):
            return RatInterval.point(other)
        return None

    def __add__(self, other: Any) -> "RatInterval":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatInterval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self) -> "RatInterval":
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other: Any) -> "RatInterval":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatInterval(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, other: Any) -> "RatInterval":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: Any) -> "RatInterval":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        products = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return RatInterval(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> "RatInterval":
        if self.contains_zero():
            raise DenominatorStraddlesZero(f"1/[{self.lo}, {self.hi}]")
        return RatInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other: Any) -> "RatInterval":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other: Any) -> "RatInterval":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def __pow__(self, exponent: int) -> "RatInterval":
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        if exponent == 0:
            return RatInterval.point(1)
        a, b = self.lo ** exponent, self.hi ** exponent
        if exponent % 2 == 1 or self.lo >= 0:
            return RatInterval(a, b)
        if self.hi <= 0:
            return RatInterval(b, a)
        return RatInterval(Fraction(0), max(a, b))

    def to_decimal(self, digits: int) -> str:
        """
        Midpoint rendered with `digits` significant digits.

        A proper interval gets extra digits when needed so the printed
        decimal itself lies inside [lo, hi].
        """
        mid = self.midpoint
        precision = max(digits, 1)
        while True:
            with localcontext() as ctx:
                ctx.prec = precision
                value = Decimal(mid.numerator) / Decimal(mid.denominator)
            if self.is_exact or self.contains(Fraction(value)):
                return format(value, "f")
            precision += 1

    def __str__(self) -> str:
        if self.is_exact:
            return str(self.lo)
        return f"[{self.lo}, {self.hi}]"
