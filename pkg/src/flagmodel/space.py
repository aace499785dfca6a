"""The flag manifold Sp(n)/(U(p) x U(n-p)): dimensions and structure constants."""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Any, Mapping

from ..utils.errors import InvalidParameters

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class TripleTable:
    """
    Dimensions d_1..d_s and the symmetric structure constants [ijk].

    Indices are 1-based. Keys are stored sorted; lookups accept any order.
    """

    dimensions: tuple[int, ...]
    triples: Mapping[Triple, Fraction] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dimensions)
        if not dims or any(d <= 0 for d in dims):
            raise InvalidParameters(f"dimensions must be positive: {dims}")
        normalized: dict[Triple, Fraction] = {}
        for key, value in self.triples.items():
            if len(key) != 3 or any(not 1 <= i <= len(dims) for i in key):
                raise InvalidParameters(f"bad triple index {key} for {len(dims)} summands")
            value = Fraction(value)
            if value < 0:
                raise InvalidParameters(f"[{key}] must be nonnegative")
            sorted_key = tuple(sorted(key))
            if sorted_key in normalized and normalized[sorted_key] != value:
                raise InvalidParameters(f"inconsistent values for {sorted_key}")
            if value != 0:
                normalized[sorted_key] = value
        object.__setattr__(self, "dimensions", dims)
        object.__setattr__(self, "triples", normalized)

    @property
    def size(self) -> int:
        return len(self.dimensions)

    def get(self, i: int, j: int, k: int) -> Fraction:
        return self.triples.get(tuple(sorted((i, j, k))), Fraction(0))

    def nonzero(self) -> list[Triple]:
        """Every ordered index triple with a nonzero constant."""
        ordered = set()
        for key in self.triples:
            ordered.update(permutations(key))
        return sorted(ordered)


@dataclass(frozen=True)
class FlagSpace:
    """Sp(n)/(U(p) x U(n-p)) with its four isotropy dimensions and [123], [134]."""

    n: int
    p: int
    d1: int
    d2: int
    d3: int
    d4: int
    c123: Fraction
    c134: Fraction

    @property
    def dimensions(self) -> tuple[int, int, int, int]:
        return (self.d1, self.d2, self.d3, self.d4)

    @property
    def is_self_dual(self) -> bool:
        return self.n == 2 * self.p

    def dual(self) -> "FlagSpace":
        return make_flag_space(self.n, self.n - self.p)

    def triple_table(self) -> TripleTable:
        return TripleTable(self.dimensions, {(1, 2, 3): self.c123, (1, 3, 4): self.c134})

    def __str__(self) -> str:
        return f"Sp({self.n})/(U({self.p}) x U({self.n - self.p}))"


def _as_int(value: Any, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidParameters(f"{name} must be an integer, got {value!r}")
    return value


def make_flag_space(n: int, p: int) -> FlagSpace:
    """Validate (n, p) and derive dimensions and structure constants."""
    n = _as_int(n, "n")
    p = _as_int(p, "p")
    if n < 3:
        raise InvalidParameters(f"n must be at least 3, got {n}")
    if not 1 <= p <= n - 1:
        raise InvalidParameters(f"p must satisfy 1 <= p <= n - 1, got p={p} for n={n}")
    return _build(n, p)


@lru_cache(maxsize=1024)
def _build(n: int, p: int) -> FlagSpace:
    q = n - p
    return FlagSpace(
        n=n,
        p=p,
        d1=2 * p * q,
        d2=q * (q + 1),
        d3=2 * p * q,
        d4=p * (p + 1),
        c123=Fraction(p * q * (q + 1), 2 * (n + 1)),
        c134=Fraction(p * (p + 1) * q, 2 * (n + 1)),
    )
