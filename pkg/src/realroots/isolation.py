"""Certified isolation and refinement of real roots."""

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from ..exactmath.polynomial import (
    UniPoly,
    as_rational,
    rational_roots,
    squarefree_decomposition,
    to_sympy,
)
from ..utils.logger import get_logger
from .intervals import RatInterval
from .sturm import Bound, _normalize_bound, sturm_chain

logger = get_logger("realroots.isolation")


@dataclass(frozen=True)
class IsolatedRoot:
    """
    A root of a square-free polynomial together with an isolating interval.

    Either lo == hi is the exact root, or poly changes sign strictly between
    the endpoints and has exactly one root in (lo, hi).
    """

    poly: UniPoly
    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    def __post_init__(self):
        object.__setattr__(self, "lo", as_rational(self.lo))
        object.__setattr__(self, "hi", as_rational(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"invalid isolating interval [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, poly: UniPoly, value: Fraction, multiplicity: int = 1) -> "IsolatedRoot":
        return cls(poly, value, value, multiplicity)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def interval(self) -> RatInterval:
        return RatInterval(self.lo, self.hi)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __float__(self) -> float:
        return float((self.lo + self.hi) / 2)


def _separate(first: IsolatedRoot, second: IsolatedRoot) -> tuple[IsolatedRoot, IsolatedRoot]:
    """Refine two roots of coprime factors until their intervals are disjoint."""
    while first.interval.overlaps(second.interval):
        if first.width >= second.width and not first.is_exact:
            first = refine(first, first.width / 2)
        elif not second.is_exact:
            second = refine(second, second.width / 2)
        else:
            first = refine(first, first.width / 2)
    return first, second


def _disjoin(roots: list[IsolatedRoot]) -> list[IsolatedRoot]:
    roots = sorted(roots, key=lambda r: (r.lo, r.hi))
    changed = True
    while changed:
        changed = False
        for i in range(len(roots) - 1):
            if roots[i].interval.overlaps(roots[i + 1].interval):
                roots[i], roots[i + 1] = _separate(roots[i], roots[i + 1])
                changed = True
        roots.sort(key=lambda r: (r.lo, r.hi))
    return roots


def _isolate_irrational(rest: UniPoly, a: Optional[Fraction], b: Optional[Fraction], multiplicity: int) -> list[IsolatedRoot]:
    """Roots of a square-free factor free of rational roots, each certified by a Sturm count."""
    bounds = {}
    if a is not None:
        bounds["inf"] = to_sympy(a)
    if b is not None:
        bounds["sup"] = to_sympy(b)
    chain = sturm_chain(rest)
    found = []
    for s, t in rest.as_poly.intervals(sqf=True, **bounds):
        lo, hi = as_rational(s), as_rational(t)
        if chain.count(lo, hi) != 1:
            raise ArithmeticError(f"interval [{lo}, {hi}] does not isolate a root of {rest}")
        found.append(IsolatedRoot(rest, lo, hi, multiplicity))
    return found


def isolate_roots(f: UniPoly, lo: Bound = None, hi: Bound = None) -> list[IsolatedRoot]:
    """
    Isolate every distinct real root of f in (lo, hi].

    Each square-free factor is handled separately, so every returned root
    carries its multiplicity in f. Rational roots are returned as exact
    points; the remaining roots get intervals from sympy, re-checked against
    our own Sturm chain.
    """
    if f.is_zero:
        raise ValueError("cannot isolate the roots of the zero polynomial")
    a = _normalize_bound(lo, -1)
    b = _normalize_bound(hi, 1)
    if a is not None and b is not None and a >= b:
        return []
    roots: list[IsolatedRoot] = []
    for factor, multiplicity in squarefree_decomposition(f):
        rest = factor
        for r in rational_roots(factor):
            rest = rest.exact_divide(UniPoly((-r, 1), factor.var))
            if (a is None or r > a) and (b is None or r <= b):
                roots.append(IsolatedRoot.exact(factor, r, multiplicity))
        if rest.degree >= 1:
            roots.extend(_isolate_irrational(rest, a, b, multiplicity))
    result = _disjoin(roots)
    logger.debug(f"Isolated {len(result)} roots of degree-{f.degree} polynomial in ({a}, {b}]")
    return result


def refine(root: IsolatedRoot, target_width: Fraction) -> IsolatedRoot:
    """Shrink the interval below target_width with sympy's root refinement."""
    if root.is_exact or root.width <= target_width:
        return root
    poly = root.poly
    lo, hi = root.lo, root.hi
    if lo < 0 < hi:
        zero = poly(Fraction(0))
        if zero == 0:
            return replace(root, lo=Fraction(0), hi=Fraction(0))
        if (zero > 0) != (poly(lo) > 0):
            hi = Fraction(0)
        else:
            lo = Fraction(0)
    s, t = poly.as_poly.refine_root(to_sympy(lo), to_sympy(hi), eps=to_sympy(target_width), check_sqf=False)
    s, t = sorted((as_rational(s), as_rational(t)))
    return replace(root, lo=s, hi=t)


def find_root(roots: list[IsolatedRoot], value: Fraction) -> Optional[IsolatedRoot]:
    """The root whose interval contains value, if any."""
    for root in roots:
        if root.lo <= value <= root.hi:
            return root
    return None
