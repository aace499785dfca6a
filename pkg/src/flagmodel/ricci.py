"""
Ricci components of invariant metrics.

The formulas only use +, -, * and /, so the same code evaluates exact
Fractions, RatIntervals and positive sympy symbols.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator, Sequence

from ..realroots.intervals import RatInterval
from ..utils.errors import InvalidParameters
from .space import FlagSpace, TripleTable


def _is_positive(value: Any) -> bool:
    if isinstance(value, RatInterval):
        return value.is_positive()
    return value > 0


@dataclass(frozen=True)
class Metric4:
    """Invariant metric (x1, x2, x3, x4); entries are Fractions or RatIntervals."""

    x1: Any
    x2: Any
    x3: Any
    x4: Any

    def __post_init__(self):
        for name in ("x1", "x2", "x3", "x4"):
            value = getattr(self, name)
            if isinstance(value, int) and not isinstance(value, bool):
                value = Fraction(value)
                object.__setattr__(self, name, value)
            if not _is_positive(value):
                raise InvalidParameters(f"metric entry {name}={value} is not positive")

    @classmethod
    def of(cls, values: Sequence[Any]) -> "Metric4":
        return cls(*values)

    def __iter__(self) -> Iterator[Any]:
        return iter((self.x1, self.x2, self.x3, self.x4))

    def as_tuple(self) -> tuple:
        return (self.x1, self.x2, self.x3, self.x4)

    @property
    def is_exact(self) -> bool:
        return not any(isinstance(v, RatInterval) for v in self)

    def scaled(self, factor: Any) -> "Metric4":
        return Metric4(*(v * factor for v in self))

    def normalized(self) -> "Metric4":
        """Rescaled so that x1 = 1."""
        if isinstance(self.x1, RatInterval):
            raise ValueError("cannot normalize by an interval entry")
        return Metric4(Fraction(1), self.x2 / self.x1, self.x3 / self.x1, self.x4 / self.x1)

    def swap_24(self) -> "Metric4":
        """Image under the p <-> n - p duality."""
        return Metric4(self.x1, self.x4, self.x3, self.x2)

    def relabel_13(self) -> "Metric4":
        """Exchange of the first and third summands."""
        return Metric4(self.x3, self.x2, self.x1, self.x4)

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self) + ")"


@dataclass(frozen=True)
class RicciComponents:
    r1: Any
    r2: Any
    r3: Any
    r4: Any

    def __iter__(self) -> Iterator[Any]:
        return iter((self.r1, self.r2, self.r3, self.r4))

    def as_tuple(self) -> tuple:
        return (self.r1, self.r2, self.r3, self.r4)


def ricci_formula(space: FlagSpace, x1: Any, x2: Any, x3: Any, x4: Any) -> tuple[Any, Any, Any, Any]:
    """The four Ricci components without any validation of the inputs."""
    a = space.c123
    b = space.c134
    d1, d2, d3, d4 = space.dimensions
    r1 = (
        1 / (2 * x1)
        + a / (2 * d1) * (x1 / (x2 * x3) - x2 / (x1 * x3) - x3 / (x1 * x2))
        + b / (2 * d1) * (x1 / (x3 * x4) - x4 / (x1 * x3) - x3 / (x1 * x4))
    )
    r2 = 1 / (2 * x2) + a / (2 * d2) * (x2 / (x1 * x3) - x1 / (x2 * x3) - x3 / (x1 * x2))
    r3 = (
        1 / (2 * x3)
        + a / (2 * d3) * (x3 / (x1 * x2) - x2 / (x1 * x3) - x1 / (x2 * x3))
        + b / (2 * d3) * (x3 / (x1 * x4) - x4 / (x1 * x3) - x1 / (x3 * x4))
    )
    r4 = 1 / (2 * x4) + b / (2 * d4) * (x4 / (x1 * x3) - x3 / (x1 * x4) - x1 / (x3 * x4))
    return r1, r2, r3, r4


def ricci_components(space: FlagSpace, g: Metric4) -> RicciComponents:
    """Ricci components r1..r4 of the invariant metric g."""
    return RicciComponents(*ricci_formula(space, *g))


def ricci_generic(table: TripleTable, x: Sequence[Any]) -> list[Any]:
    """
    Ricci components for any set of summands:

        r_k = 1/(2 x_k) + 1/(4 d_k) sum_{i,j} [ijk] x_k/(x_i x_j)
                        - 1/(2 d_k) sum_{i,j} [kij] x_j/(x_k x_i)
    """
    if len(x) != table.size:
        raise InvalidParameters(f"expected {table.size} metric entries, got {len(x)}")
    for value in x:
        if not _is_positive(value):
            raise InvalidParameters(f"metric entry {value} is not positive")
    active = table.nonzero()
    result = []
    for k in range(1, table.size + 1):
        xk = x[k - 1]
        dk = table.dimensions[k - 1]
        gain: Any = Fraction(0)
        loss: Any = Fraction(0)
        for i, j, m in active:
            c = table.get(i, j, m)
            if m == k:
                gain = gain + c * xk / (x[i - 1] * x[j - 1])
            if i == k:
                loss = loss + c * x[m - 1] / (xk * x[j - 1])
        result.append(1 / (2 * xk) + gain / (4 * dk) - loss / (2 * dk))
    return result
