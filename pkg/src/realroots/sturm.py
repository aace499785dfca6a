"""Sturm sequences and distinct real root counting."""

import math
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from ..exactmath.polynomial import UniPoly, as_rational, squarefree_part

Bound = Union[None, int, float, Fraction]


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def _normalize_bound(bound: Bound, infinite: int) -> Optional[Fraction]:
    """None for the infinite side, otherwise an exact rational."""
    if bound is None:
        return None
    if isinstance(bound, float):
        if math.isinf(bound) and (bound > 0) == (infinite > 0):
            return None
        raise TypeError("finite bounds must be exact rationals")
    return as_rational(bound)


class SturmChain:
    """
    Sturm sequence of the square-free part of a polynomial, as sympy builds it.

    V(a) - V(b) counts the distinct real roots in (a, b]; zeros in the
    sequence are skipped when counting sign variations.
    """

    def __init__(self, poly: UniPoly):
        if poly.is_zero:
            raise ValueError("Sturm chain of the zero polynomial")
        base = squarefree_part(poly)
        chain = base.as_poly.sturm() if base.degree > 0 else [base.as_poly]
        self.polys: tuple[UniPoly, ...] = tuple(
            UniPoly.from_sympy(p, poly.var) for p in chain if not p.is_zero
        )

    @property
    def base(self) -> UniPoly:
        return self.polys[0]

    def __len__(self) -> int:
        return len(self.polys)

    @staticmethod
    def _variations(signs: list[int]) -> int:
        nonzero = [s for s in signs if s != 0]
        return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)

    def sign_variations(self, x: Optional[Fraction], at_infinity: int = 1) -> int:
        """Sign variations at x, or at +/- infinity when x is None."""
        if x is None:
            signs = []
            for p in self.polys:
                s = _sign(p.leading_coefficient)
                if at_infinity < 0 and p.degree % 2 == 1:
                    s = -s
                signs.append(s)
            return self._variations(signs)
        return self._variations([_sign(p(x)) for p in self.polys])

    def count(self, lo: Bound = None, hi: Bound = None) -> int:
        """Distinct real roots in (lo, hi]; None means unbounded."""
        a = _normalize_bound(lo, -1)
        b = _normalize_bound(hi, 1)
        if a is not None and b is not None and a >= b:
            return 0
        return self.sign_variations(a, -1) - self.sign_variations(b, 1)


@lru_cache(maxsize=512)
def sturm_chain(poly: UniPoly) -> SturmChain:
    return SturmChain(poly)


def count_roots(f: UniPoly, lo: Bound = None, hi: Bound = None) -> int:
    """Number of distinct real roots of f in (lo, hi]."""
    return sturm_chain(f).count(lo, hi)
