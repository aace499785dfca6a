"""Polynomial Einstein system, Kahler-Einstein metrics and Einstein constants."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Union

import sympy as sp

from ..exactmath.multivariate import MultiPoly, symbols_for
from ..realroots.intervals import RatInterval
from ..utils.errors import FactorizationMismatch, NotEinstein
from ..utils.logger import get_logger
from .ricci import Metric4, ricci_components, ricci_formula, ricci_generic
from .space import FlagSpace

logger = get_logger("flagmodel.einstein")

GENS = ("x1", "x2", "x3", "x4")
NORMALIZED_GENS = ("x2", "x3", "x4")


@dataclass(frozen=True)
class EinsteinSystem:
    """
    r1 - r3 = 0, r1 - r2 = 0, r3 - r4 = 0 with denominators cleared.

    `homogeneous` keeps x1; `equations` are the same polynomials at x1 = 1
    in the generators (x2, x3, x4). `scalars[i]` is the rational c with
    homogeneous[i] == c * (the i-th equation in its expanded form).
    """

    space: FlagSpace
    homogeneous: tuple[MultiPoly, MultiPoly, MultiPoly]
    equations: tuple[MultiPoly, MultiPoly, MultiPoly]
    scalars: tuple[Fraction, Fraction, Fraction]

    def residuals(self, g: Metric4) -> tuple[Any, Any, Any]:
        """Values of the homogeneous polynomials at g (exact or enclosures)."""
        point = dict(zip(GENS, g))
        return tuple(eq.evaluate(point) for eq in self.homogeneous)

    def is_satisfied_by(self, g: Metric4) -> bool:
        return all(value == 0 for value in self.residuals(g))


def expanded_system(space: FlagSpace) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    """The three equations in their expanded textbook form, used as fixtures."""
    n, p = space.n, space.p
    x1, x2, x3, x4 = MultiPoly.symbols(GENS)
    first = (x1 - x3) * (
        x1 * x2 + p * x1 * x2 + x2 * x3 + p * x2 * x3 + x1 * x4 + n * x1 * x4
        - p * x1 * x4 - 2 * x2 * x4 - 2 * n * x2 * x4 + x3 * x4 + n * x3 * x4 - p * x3 * x4
    )
    second = (
        4 * (n + 1) * x3 * x4 * (x2 - x1)
        + (n + p + 1) * x4 * (x1 ** 2 - x2 ** 2)
        - (n - 3 * p + 1) * x3 ** 2 * x4
        + (p + 1) * x2 * (x1 ** 2 - x3 ** 2 - x4 ** 2)
    )
    third = (
        4 * (n + 1) * x1 * x2 * (x4 - x3)
        + (2 * n - p + 1) * x2 * (x3 ** 2 - x4 ** 2)
        + (2 * n - 3 * p - 1) * x1 ** 2 * x2
        + (n - p + 1) * x4 * (x3 ** 2 - x1 ** 2 - x2 ** 2)
    )
    return first, second, third


@lru_cache(maxsize=256)
def einstein_system(space: FlagSpace) -> EinsteinSystem:
    """
    Derive the Einstein system symbolically from the Ricci components.

    The closed-form components are checked against the general formula over
    the structure-constant table before any denominator is cleared.
    """
    x = symbols_for(GENS)
    closed = ricci_formula(space, *x)
    for index, (a, b) in enumerate(zip(closed, ricci_generic(space.triple_table(), x)), start=1):
        if sp.cancel(a - b) != 0:
            raise FactorizationMismatch(f"r{index} for {space} disagrees with the structure-constant formula")
    r1, r2, r3, r4 = closed
    derived = tuple(MultiPoly.from_rational(d, GENS) for d in (r1 - r3, r1 - r2, r3 - r4))
    scalars = []
    for index, (poly, reference) in enumerate(zip(derived, expanded_system(space)), start=1):
        if not poly.is_homogeneous():
            raise FactorizationMismatch(f"equation {index} for {space} is not homogeneous")
        ratio = poly.proportionality(reference)
        if ratio is None:
            logger.error(f"Derived equation {index} for {space} differs from its expanded form")
            raise FactorizationMismatch(f"equation {index} for {space} is not a multiple of its expanded form")
        scalars.append(ratio)
    equations = tuple(poly.specialize({"x1": 1}) for poly in derived)
    logger.debug(f"Einstein system for {space} certified with scalars {scalars}")
    return EinsteinSystem(space, derived, equations, tuple(scalars))


def kahler_einstein_metrics(space: FlagSpace) -> list[Metric4]:
    """
    The four normalized Kahler-Einstein tuples, in the order of the rational
    x3 values (n+2p+2)/n, (3n-2p+2)/n, n/(n+2p+2), n/(3n-2p+2).

    The third and fourth are the first two with x1 and x3 exchanged. When
    n = 2p the first two are the unique Kahler-Einstein metric and its
    x2 <-> x4 image.
    """
    n, p = space.n, space.p
    g1 = Metric4(Fraction(n, 2), n + p + 1, Fraction(n, 2) + p + 1, p + 1)
    g2 = Metric4(Fraction(n, 2), n - p + 1, Fraction(3 * n, 2) - p + 1, 2 * n - p + 1)
    tuples = [g1.normalized(), g2.normalized(), g1.relabel_13().normalized(), g2.relabel_13().normalized()]
    system = einstein_system(space)
    for g in tuples:
        if not system.is_satisfied_by(g):
            raise NotEinstein(f"Kahler-Einstein tuple {g} fails the Einstein system for {space}")
    return tuples


def einstein_constant(space: FlagSpace, g: Metric4) -> Union[Fraction, RatInterval]:
    """
    The common value of r1..r4.

    Exact metrics must give four equal components. For interval metrics the
    four enclosures must share a point; their intersection is returned.
    """
    components = ricci_components(space, g).as_tuple()
    if g.is_exact:
        if len(set(components)) != 1:
            raise NotEinstein(f"Ricci components {components} of {g} differ")
        return components[0]
    enclosures = [c if isinstance(c, RatInterval) else RatInterval.point(c) for c in components]
    common = enclosures[0]
    for other in enclosures[1:]:
        common = common.intersect(other)
        if common is None:
            raise NotEinstein(f"Ricci component enclosures of {g} are disjoint")
    return common
