"""
Case 1 of the case analysis: metrics with x1 = x3.

With x1 = x3 = 1 the Einstein system reduces to two equations in x2, x4.
Eliminating x2 gives the quartic f(x4), eliminating x4 gives g(x2); every
positive root of either is paired with its partner coordinate and checked.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..exactmath.multivariate import BiPoly, MultiPoly
from ..exactmath.polynomial import UniPoly
from ..exactmath.resultant import resultant
from ..flagmodel.einstein import einstein_constant, einstein_system
from ..flagmodel.ricci import Metric4
from ..flagmodel.space import FlagSpace
from ..realroots.isolation import IsolatedRoot, isolate_roots
from ..utils.errors import FactorizationMismatch
from ..utils.logger import get_logger
from .certify import at_width, check_membership, positive_root, rational_enclosure, rational_sign, widths
from .types import CaseOrigin, Certificate, EinsteinSolution, SolutionKind

logger = get_logger("solver.case1")

CASE1_GENS = ("x2", "x4")


@dataclass(frozen=True)
class Case1System:
    """The two reduced equations and the eliminants f(x4), g(x2)."""
    eq1: BiPoly
    eq2: BiPoly
    f: UniPoly
    g: UniPoly


def expanded_case1_equations(space: FlagSpace) -> tuple[MultiPoly, MultiPoly]:
    n, p = space.n, space.p
    x2, x4 = MultiPoly.symbols(CASE1_GENS)
    eq1 = (n + p + 1) * x2 ** 2 + 4 * (n - p + 1) - 4 * (n + 1) * x2 + (p + 1) * x2 * x4
    eq2 = (n - p + 1) * x2 * x4 + (2 * n - p + 1) * x4 ** 2 - 4 * (n + 1) * x4 + 4 * (p + 1)
    return eq1, eq2


def expanded_f(n: int, p: int) -> UniPoly:
    """f_{n,p}(x4) in its expanded form."""
    return UniPoly(
        [
            8 * (p + 1) ** 2 * (n + p + 1),
            -8 * (n + 1) * (p + 1) * (n + 3 * p + 1),
            2 * (n**3 + 9 * n**2 * p + 7 * n**2 + 4 * n * p**2 + 16 * n * p + 8 * n - 2 * p**3 + 2 * p**2 + 6 * p + 2),
            -4 * (n + 1) * (n**2 + 2 * n * p + n - p**2 + p),
            n * (n + 1) * (2 * n - p + 1),
        ],
        "x4",
    )


def expanded_g(n: int, p: int) -> UniPoly:
    """g_{n,p}(x2) in its expanded form."""
    return UniPoly(
        [
            8 * (n - p + 1) ** 2 * (2 * n - p + 1),
            -8 * (n + 1) * (4 * n - 3 * p + 1) * (n - p + 1),
            2 * (12 * n**3 - 11 * n**2 * p + 25 * n**2 - 2 * n * p**2 - 20 * n * p + 14 * n + 2 * p**3 + 2 * p**2 - 6 * p + 2),
            -4 * (n + 1) * (2 * n**2 + 2 * n - p**2 - p),
            n * (n + 1) * (n + p + 1),
        ],
        "x2",
    )


def _reduced(poly: MultiPoly, reference: MultiPoly, label: str) -> BiPoly:
    reduced = poly.specialize({"x1": 1, "x3": 1}).strip_monomial_content()
    if reduced.proportionality(reference) is None:
        raise FactorizationMismatch(f"{label} at x1 = x3 = 1 is not a multiple of {reference}")
    return reference


def build_case1(space: FlagSpace) -> Case1System:
    """Derive the Case-1 equations and both eliminants, certified against their expanded forms."""
    n, p = space.n, space.p
    system = einstein_system(space)
    reference1, reference2 = expanded_case1_equations(space)
    # r1 - r2 reduces to -x4 * eq1 and r3 - r4 to -x2 * eq2
    eq1 = _reduced(system.homogeneous[1], reference1, "r1 - r2")
    eq2 = _reduced(system.homogeneous[2], reference2, "r3 - r4")

    f = resultant(eq1, eq2, "x2").normalized_to(n * (n + 1) * (2 * n - p + 1))
    g = resultant(eq1, eq2, "x4").normalized_to(n * (n + 1) * (n + p + 1))
    if f != expanded_f(n, p):
        raise FactorizationMismatch(f"f for {space} differs from its expanded form: {f}")
    if g != expanded_g(n, p):
        raise FactorizationMismatch(f"g for {space} differs from its expanded form: {g}")
    logger.debug(f"Case 1 eliminants for {space}: f = {f}, g = {g}")
    return Case1System(eq1, eq2, f, g)


def _partner(space: FlagSpace, side: str) -> tuple[UniPoly, UniPoly]:
    """x2 as a function of x4 on the f side, x4 as a function of x2 on the g side."""
    n, p = space.n, space.p
    if side == "f":
        numer = UniPoly([-4 * (p + 1), 4 * (n + 1), -(2 * n - p + 1)], "x4")
        denom = UniPoly([0, n - p + 1], "x4")
    else:
        numer = UniPoly([-4 * (n - p + 1), 4 * (n + 1), -(n + p + 1)], "x2")
        denom = UniPoly([0, p + 1], "x2")
    return numer, denom


def _solve_side(
    space: FlagSpace,
    case1: Case1System,
    side: str,
    certification_width: Fraction,
    minimum_width: Fraction,
) -> list[EinsteinSolution]:
    eliminant = case1.f if side == "f" else case1.g
    own, other = ("x4", "x2") if side == "f" else ("x2", "x4")
    numer, denom = _partner(space, side)
    roots = isolate_roots(eliminant, 0, None)
    logger.debug(f"{space}: {len(roots)} positive roots of {side}")

    solutions = []
    for root in roots:
        sign, root = rational_sign(numer, denom, root, minimum_width)
        if sign != 1:
            logger.debug(f"{space}: {side}-root near {float(root):.6f} has partner {other} <= 0")
            continue
        for label, eq in (("eq1", case1.eq1), ("eq2", case1.eq2)):
            cleared = eq.substitute_univariate(own, {other: (numer, denom)})
            check_membership(cleared, root.poly, f"Case 1 {label} on the {side} side")

        root = at_width(positive_root(root, minimum_width), certification_width)
        own_value = root.interval
        other_value = rational_enclosure(numer, denom, root, minimum_width)
        x2, x4 = (other_value, own_value) if side == "f" else (own_value, other_value)
        metric = Metric4(Fraction(1), x2, Fraction(1), x4)
        solutions.append(
            EinsteinSolution(
                metric=metric,
                kind=SolutionKind.NON_KAHLER,
                einstein_constant=einstein_constant(space, metric),
                origin=CaseOrigin.CASE1,
                certificate=Certificate(
                    positivity=True,
                    membership=f"{root.poly} divides both cleared Case-1 equations",
                    defining_polynomial=str(root.poly),
                ),
            )
        )
    return solutions


def solve_case1(
    space: FlagSpace,
    case1: Optional[Case1System] = None,
    certification_width: Optional[Fraction] = None,
    minimum_width: Optional[Fraction] = None,
) -> list[EinsteinSolution]:
    """All positive solutions with x1 = x3, from both eliminants."""
    case1 = case1 or build_case1(space)
    certification_width, minimum_width = widths(certification_width, minimum_width)
    found = _solve_side(space, case1, "f", certification_width, minimum_width)
    for candidate in _solve_side(space, case1, "g", certification_width, minimum_width):
        if not any(candidate.matches(s) for s in found):
            found.append(candidate)
    if found:
        logger.warning(f"{space}: Case 1 produced {len(found)} solutions")
    else:
        logger.debug(f"{space}: Case 1 has no admissible solutions")
    return found
