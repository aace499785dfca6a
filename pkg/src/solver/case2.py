"""
Case 2 of the case analysis: metrics with x1 != x3.

r1 - r3 divided by (x1 - x3) is linear in x2, which gives x2 as a rational
function of (x3, x4). Substituting it into the two remaining equations
leaves F1(x3, x4) and F2(x3, x4); their resultant in x4 splits into
(x3 + 1)^4, four rational linear factors (the Kahler-Einstein sub-cases)
and the palindromic quartic Q(x3).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..exactmath.multivariate import BiPoly, MultiPoly
from ..exactmath.polynomial import UniPoly, poly_gcd
from ..exactmath.resultant import resultant
from ..flagmodel.einstein import einstein_constant, einstein_system, kahler_einstein_metrics
from ..flagmodel.ricci import Metric4
from ..flagmodel.space import FlagSpace
from ..realroots.intervals import RatInterval
from ..realroots.isolation import isolate_roots
from ..realroots.sturm import count_roots
from ..utils.errors import (
    DegenerateDenominator,
    FactorizationMismatch,
    NotDivisible,
    UnexpectedNonKahler,
)
from ..utils.logger import get_logger
from .certify import (
    at_width,
    check_membership,
    check_nonvanishing,
    positive_root,
    rational_enclosure,
    rational_sign,
    widths,
)
from .types import CaseOrigin, Certificate, EinsteinSolution, SolutionKind

logger = get_logger("solver.case2")

SYSTEM_GENS = ("x2", "x3", "x4")
CASE2_GENS = ("x3", "x4")
SUBCASES = (CaseOrigin.CASE2A_SUB1, CaseOrigin.CASE2A_SUB2, CaseOrigin.CASE2A_SUB3, CaseOrigin.CASE2A_SUB4)


@dataclass(frozen=True)
class Case2System:
    F1: BiPoly
    F2: BiPoly
    x2_numer: MultiPoly
    x2_denom: MultiPoly


@dataclass(frozen=True)
class ResultantFactors:
    """Res_x4(F1, F2) = scalar * (x3 + 1)^4 * prod(x3 - r) * Q."""
    scalar: Fraction
    linear_roots: tuple[Fraction, Fraction, Fraction, Fraction]
    Q: UniPoly


def x2_relation(space: FlagSpace) -> tuple[MultiPoly, MultiPoly]:
    """x2 = numer / denom on (x2, x3, x4)."""
    n, p = space.n, space.p
    _, x3, x4 = MultiPoly.symbols(SYSTEM_GENS)
    numer = (n - p + 1) * (x3 + 1) * x4
    denom = 2 * (n + 1) * x4 - (p + 1) * (x3 + 1)
    return numer, denom


def expanded_F1(space: FlagSpace) -> BiPoly:
    n, p = space.n, space.p
    x3, x4 = MultiPoly.symbols(CASE2_GENS)
    a = 3 * n**3 + 5 * n**2 * p + 9 * n**2 + 2 * n * p**2 + 12 * n * p + 10 * n - 2 * p**3 + 6 * p + 4
    b = 5 * n**3 + 3 * n**2 * p + 15 * n**2 - 2 * n * p**2 + 4 * n * p + 14 * n + 2 * p**3 + 2 * p + 4
    return (
        -a * x3**2 * x4**2
        + 2 * b * x3 * x4**2
        - a * x4**2
        + 2 * (n + 1) * (p + 1) * (n + 3 * p + 1) * x3**3 * x4
        + 4 * (p + 1) ** 2 * (n - p + 1) * x3**3
        - 2 * (n + 1) * (p + 1) * (5 * n - p + 5) * x3**2 * x4
        + 4 * (p + 1) ** 2 * (2 * n - p + 2) * x3**2
        + 2 * (n + 1) * (p + 1) * (n - p + 1) * x3 * x4**3
        - 2 * (n + 1) * (p + 1) * (5 * n - p + 5) * x3 * x4
        + 4 * (p + 1) ** 2 * (n - p + 1) * x3
        + 2 * (n + 1) * (p + 1) * (n - p + 1) * x4**3
        + 2 * (n + 1) * (p + 1) * (n + 3 * p + 1) * x4
        - 2 * p * (p + 1) ** 2 * x3**4
        - 2 * p * (p + 1) ** 2
    )


def expanded_F2(space: FlagSpace) -> BiPoly:
    n, p = space.n, space.p
    x3, x4 = MultiPoly.symbols(CASE2_GENS)
    c = 3 * n**2 + 4 * n * p + 8 * n - 2 * p**2 + 2 * p + 4
    return (
        2 * (p + 1) * (n - p) * x3**3
        - 2 * (n + 1) * (2 * n - 3 * p - 1) * x3**2 * x4
        - c * x4**2
        - c * x3 * x4**2
        - 2 * (p + 1) * (n + p + 2) * x3**2
        + 4 * (n + 1) * (2 * n + p + 3) * x3 * x4
        - 2 * (p + 1) * (n + p + 2) * x3
        + 2 * (n + 1) * (2 * n - p + 1) * x4**3
        - 2 * (n + 1) * (2 * n - 3 * p - 1) * x4
        + 2 * (p + 1) * (n - p)
    )


def expanded_Q(n: int, p: int) -> UniPoly:
    """Q_{n,p}(x3); palindromic of degree 4."""
    outer = n**2 * (3 * n + 4)
    inner = -8 * n * (2 * n**2 + n * p + 5 * n - p**2 + 3)
    middle = 2 * (13 * n**3 + 8 * n**2 * p + 36 * n**2 - 8 * n * p**2 + 16 * n * p + 40 * n - 16 * p**2 + 16)
    return UniPoly([outer, inner, middle, inner, outer], "x3")


def kahler_x3_values(space: FlagSpace) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    n, p = space.n, space.p
    return (
        Fraction(n + 2 * p + 2, n),
        Fraction(3 * n - 2 * p + 2, n),
        Fraction(n, n + 2 * p + 2),
        Fraction(n, 3 * n - 2 * p + 2),
    )


def kahler_x4_values(space: FlagSpace) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """The Kahler x4 belonging to each sub-case, aligned with kahler_x3_values."""
    n, p = space.n, space.p
    return (
        Fraction(2 * (p + 1), n),
        Fraction(2 * (2 * n - p + 1), n),
        Fraction(2 * (p + 1), n + 2 * p + 2),
        Fraction(2 * (2 * n - p + 1), 3 * n - 2 * p + 2),
    )


def _substitute_x2(poly: MultiPoly, numer: MultiPoly, denom: MultiPoly, label: str) -> BiPoly:
    cleared = poly.substitute_fraction("x2", numer, denom).drop("x2")
    if cleared.is_zero:
        raise DegenerateDenominator(f"{label} vanishes identically after substituting x2")
    cleared = cleared.strip_monomial_content()
    cleared, multiplicity = cleared.strip_linear_factor("x3", -1)
    logger.debug(f"{label}: removed (x3 + 1)^{multiplicity}")
    return cleared.primitive()


def _check_denominator(poly: BiPoly, space: FlagSpace, label: str) -> None:
    """The x2 relation denominator must not divide the substituted equation."""
    n, p = space.n, space.p
    x3, _ = MultiPoly.symbols(CASE2_GENS)
    root_numer = (p + 1) * (x3 + 1)
    root_denom = MultiPoly.constant(2 * (n + 1), CASE2_GENS)
    if poly.substitute_fraction("x4", root_numer, root_denom).is_zero:
        logger.error(f"{space}: denominator of the x2 relation divides {label}")
        raise DegenerateDenominator(f"denominator of the x2 relation divides {label} for {space}")


def build_case2(space: FlagSpace) -> Case2System:
    """F1, F2 from the x2 relation, certified proportional to their expanded forms."""
    system = einstein_system(space)
    numer, denom = x2_relation(space)

    linear = system.equations[0].exact_divide_linear("x3", 1)
    x2 = MultiPoly.variable("x2", SYSTEM_GENS)
    if linear.proportionality(denom * x2 - numer) is None:
        raise FactorizationMismatch(f"(r1 - r3)/(x1 - x3) for {space} is not the x2 relation")

    result = []
    for index, (equation, reference) in enumerate(
        zip(system.equations[1:], (expanded_F1(space), expanded_F2(space))), start=1
    ):
        label = f"F{index}"
        F = _substitute_x2(equation, numer, denom, label)
        _check_denominator(F, space, label)
        if F.proportionality(reference) is None:
            logger.error(f"{space}: derived {label} differs from its expanded form")
            raise FactorizationMismatch(f"{label} for {space} is not a multiple of its expanded form")
        result.append(reference)
    logger.debug(f"{space}: F1 and F2 certified")
    return Case2System(result[0], result[1], numer, denom)


def factor_resultant_P(space: FlagSpace, F1: BiPoly, F2: BiPoly) -> ResultantFactors:
    """Split Res_x4(F1, F2) into (x3 + 1)^4, the four Kahler linear factors and Q."""
    P = resultant(F1, F2, "x4")
    linear_roots = kahler_x3_values(space)
    rest = P
    try:
        for _ in range(4):
            rest = rest.exact_divide(UniPoly([1, 1], "x3"))
        for r in linear_roots:
            rest = rest.exact_divide(UniPoly([-r, 1], "x3"))
    except NotDivisible as exc:
        logger.error(f"{space}: resultant does not factor as expected")
        raise FactorizationMismatch(f"Res_x4(F1, F2) for {space}: {exc}") from exc

    Q = expanded_Q(space.n, space.p)
    if rest.degree != 4 or not rest.is_proportional_to(Q):
        raise FactorizationMismatch(f"quartic factor for {space} is {rest}, expected a multiple of {Q}")
    scalar = rest.leading_coefficient / Q.leading_coefficient
    logger.debug(f"{space}: P = {scalar} * (x3 + 1)^4 * linear factors * Q")
    return ResultantFactors(scalar, linear_roots, Q)


def _specialized(F: BiPoly, x3: Fraction) -> UniPoly:
    return F.specialize({"x3": x3}).to_unipoly("x4")


def solve_case2a(
    space: FlagSpace,
    linear_roots: tuple[Fraction, ...],
    F1: BiPoly,
    F2: BiPoly,
) -> list[EinsteinSolution]:
    """Common positive roots of F1, F2 at each rational x3; all must be Kahler-Einstein."""
    n, p = space.n, space.p
    system = einstein_system(space)
    kahler = kahler_einstein_metrics(space)
    subcase_points = list(zip(linear_roots, kahler_x4_values(space)))
    solutions: list[EinsteinSolution] = []

    for x3 in dict.fromkeys(linear_roots):
        common = poly_gcd(_specialized(F1, x3), _specialized(F2, x3))
        if common.degree < 1:
            logger.debug(f"{space}: no common x4 at x3 = {x3}")
            continue
        for root in isolate_roots(common, 0, None):
            if not root.is_exact:
                raise UnexpectedNonKahler(f"irrational x4 root of {common} at x3 = {x3} for {space}")
            x4 = root.lo
            denom = 2 * (n + 1) * x4 - (p + 1) * (x3 + 1)
            if denom == 0:
                raise DegenerateDenominator(f"the x2 relation is undefined at x3 = {x3}, x4 = {x4}")
            x2 = (n - p + 1) * (x3 + 1) * x4 / denom
            if x2 <= 0:
                logger.debug(f"{space}: x3 = {x3}, x4 = {x4} gives x2 = {x2} <= 0")
                continue
            metric = Metric4(Fraction(1), x2, x3, x4)
            if not system.is_satisfied_by(metric):
                raise UnexpectedNonKahler(f"{metric} does not satisfy the Einstein system for {space}")
            match = next((i for i, g in enumerate(kahler) if g.as_tuple() == metric.as_tuple()), None)
            if match is None:
                logger.error(f"{space}: sub-case (a) produced {metric}, not Kahler-Einstein")
                raise UnexpectedNonKahler(f"{metric} is not among the Kahler-Einstein metrics of {space}")
            subcase = next((i for i, point in enumerate(subcase_points) if point == (x3, x4)), None)
            if subcase is None:
                raise UnexpectedNonKahler(f"{metric} matches no sub-case of {space}")
            solutions.append(
                EinsteinSolution(
                    metric=metric,
                    kind=SolutionKind.KAHLER,
                    einstein_constant=einstein_constant(space, metric),
                    origin=SUBCASES[subcase],
                    certificate=Certificate(
                        positivity=True,
                        membership="exact zero residual",
                        kahler_match=match,
                    ),
                )
            )
    logger.debug(f"{space}: sub-case (a) gives {len(solutions)} Kahler-Einstein metrics")
    return solutions


def x4_from_x3(space: FlagSpace) -> tuple[UniPoly, UniPoly]:
    """x4 as a rational function of x3."""
    n, p = space.n, space.p
    numer = UniPoly([-n, 2 * (n + 2 * p + 2), -n], "x3")
    denom = UniPoly([n, n], "x3")
    return numer, denom


def x2_from_x3(space: FlagSpace) -> tuple[UniPoly, UniPoly]:
    """x2 as a rational function of x3."""
    n, p = space.n, space.p
    quadratic = UniPoly([-n, 2 * (n + 2 * p + 2), -n], "x3")
    numer = UniPoly([1, 1], "x3") * quadratic * (-n + p - 1)
    edge = n * (2 * n + p + 3)
    denom = UniPoly([edge, -2 * (2 * n**2 + 3 * n * p + 5 * n + 4 * p + 4), edge], "x3")
    return numer, denom


def certify_case2b_membership(space: FlagSpace, Q: UniPoly, F1: BiPoly, F2: BiPoly) -> None:
    """The x4(x3) and x2(x3) relations hold on every root of Q: all cleared numerators are multiples of Q."""
    x4_numer, x4_denom = x4_from_x3(space)
    x2_numer, x2_denom = x2_from_x3(space)
    check_nonvanishing(x4_denom, Q, "x4(x3)")
    check_nonvanishing(x2_denom, Q, "x2(x3)")
    for label, F in (("F1", F1), ("F2", F2)):
        cleared = F.substitute_univariate("x3", {"x4": (x4_numer, x4_denom)})
        check_membership(cleared, Q, f"{label} at x4(x3)")
    system = einstein_system(space)
    fractions = {"x2": (x2_numer, x2_denom), "x4": (x4_numer, x4_denom)}
    for index, equation in enumerate(system.equations, start=1):
        cleared = equation.substitute_univariate("x3", fractions)
        check_membership(cleared, Q, f"Einstein equation {index} at the x4(x3) and x2(x3) relations")


def solve_case2b(
    space: FlagSpace,
    Q: UniPoly,
    F1: Optional[BiPoly] = None,
    F2: Optional[BiPoly] = None,
    certification_width: Optional[Fraction] = None,
    minimum_width: Optional[Fraction] = None,
) -> list[EinsteinSolution]:
    """Admissible solutions over the roots of Q, with x4 and x2 from the x4(x3) and x2(x3) relations."""
    certification_width, minimum_width = widths(certification_width, minimum_width)
    if F1 is None or F2 is None:
        F1, F2 = expanded_F1(space), expanded_F2(space)
    if poly_gcd(Q, Q.derivative()).degree > 0:
        raise FactorizationMismatch(f"Q for {space} is not square-free")
    certify_case2b_membership(space, Q, F1, F2)

    x4_numer, x4_denom = x4_from_x3(space)
    x2_numer, x2_denom = x2_from_x3(space)
    positive = count_roots(Q, 0, None)
    if positive != 4:
        logger.warning(f"{space}: Q has {positive} positive roots, expected 4")
    # roots shared with a numerator give x4 = 0 or x2 = 0 exactly
    zero_locus = poly_gcd(x4_numer * x2_numer, Q)
    if zero_locus.degree > 0:
        logger.debug(f"{space}: roots of {zero_locus} make x4 or x2 vanish and are inadmissible")
    candidates = Q.exact_divide(zero_locus)
    roots = isolate_roots(candidates, 0, None) if candidates.degree > 0 else []

    solutions = []
    for root in roots:
        x4_sign, root = rational_sign(x4_numer, x4_denom, root, minimum_width)
        if x4_sign != 1:
            logger.debug(f"{space}: Q root near {float(root):.6f} gives x4 <= 0")
            continue
        x2_sign, root = rational_sign(x2_numer, x2_denom, root, minimum_width)
        if x2_sign != 1:
            logger.debug(f"{space}: Q root near {float(root):.6f} gives x2 <= 0")
            continue
        root = at_width(positive_root(root, minimum_width), certification_width)
        x4 = rational_enclosure(x4_numer, x4_denom, root, minimum_width)
        x2 = rational_enclosure(x2_numer, x2_denom, root, minimum_width)
        x3: RatInterval = root.interval
        metric = Metric4(Fraction(1), x2, x3, x4)
        solutions.append(
            EinsteinSolution(
                metric=metric,
                kind=SolutionKind.NON_KAHLER,
                einstein_constant=einstein_constant(space, metric),
                origin=CaseOrigin.CASE2B,
                certificate=Certificate(
                    positivity=True,
                    membership="Q divides F1, F2 and the Einstein system under the x4(x3) and x2(x3) relations",
                    defining_polynomial=str(Q),
                ),
            )
        )
    logger.debug(f"{space}: sub-case (b) gives {len(solutions)} admissible solutions")
    return solutions
