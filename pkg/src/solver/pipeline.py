"""Full enumeration of invariant Einstein metrics for one (n, p)."""

from fractions import Fraction
from typing import Optional

from ..flagmodel.ricci import Metric4
from ..flagmodel.space import make_flag_space
from ..utils.logger import get_logger
from .case1 import build_case1, solve_case1
from .case2 import build_case2, factor_resultant_P, solve_case2a, solve_case2b
from .certify import widths
from .types import EinsteinSolution, SolutionKind

logger = get_logger("solver.pipeline")


def relabel_partner(metric: Metric4) -> Metric4:
    """(x1, x2, x3, x4) -> (x3, x2, x1, x4), renormalized to x1 = 1."""
    x3 = metric.x3
    return Metric4(Fraction(1), metric.x2 / x3, 1 / x3, metric.x4 / x3)


def _deduplicate(solutions: list[EinsteinSolution]) -> list[EinsteinSolution]:
    unique: list[EinsteinSolution] = []
    for candidate in solutions:
        if any(candidate.matches(s) for s in unique):
            logger.debug(f"Dropping duplicate solution {candidate.metric}")
            continue
        unique.append(candidate)
    return unique


def _record_partners(solutions: list[EinsteinSolution]) -> None:
    for index, solution in enumerate(solutions):
        if solution.kind is not SolutionKind.NON_KAHLER:
            continue
        image = relabel_partner(solution.metric)
        for other_index, other in enumerate(solutions):
            if other.kind is SolutionKind.NON_KAHLER and other.matches(image):
                solution.certificate.partner = other_index
                break


def enumerate_einstein(
    n: int,
    p: int,
    certification_width: Optional[Fraction] = None,
    minimum_width: Optional[Fraction] = None,
) -> list[EinsteinSolution]:
    """
    Every invariant Einstein metric with x1 = 1, certified and sorted by x3.

    Case 1 (x1 = x3) is solved honestly even though it contributes nothing.
    Non-Kahler solutions carry the index of their x1 <-> x3 relabel partner.
    """
    space = make_flag_space(n, p)
    certification_width, minimum_width = widths(certification_width, minimum_width)
    logger.info(f"Enumerating Einstein metrics on {space}")

    found = solve_case1(space, build_case1(space), certification_width, minimum_width)
    case2 = build_case2(space)
    factors = factor_resultant_P(space, case2.F1, case2.F2)
    found += solve_case2a(space, factors.linear_roots, case2.F1, case2.F2)
    found += solve_case2b(space, factors.Q, case2.F1, case2.F2, certification_width, minimum_width)

    solutions = sorted(_deduplicate(found), key=lambda s: s.x3_key)
    _record_partners(solutions)

    kahler, non_kahler = split_counts(solutions)
    logger.info(f"{space}: {len(solutions)} Einstein metrics ({kahler} Kahler, {non_kahler} non-Kahler)")
    if (kahler, non_kahler) != (4, 2):
        logger.warning(f"{space}: unexpected split {kahler} + {non_kahler}")
    return solutions


def duality_check(
    n: int,
    p: int,
    solutions: Optional[list[EinsteinSolution]] = None,
    dual_solutions: Optional[list[EinsteinSolution]] = None,
) -> bool:
    """The solution set of (n, n - p) is the x2 <-> x4 image of the set for (n, p)."""
    if solutions is None:
        solutions = enumerate_einstein(n, p)
    if dual_solutions is None:
        dual_solutions = solutions if make_flag_space(n, p).is_self_dual else enumerate_einstein(n, n - p)
    if len(solutions) != len(dual_solutions):
        logger.warning(f"Duality ({n}, {p}): {len(solutions)} vs {len(dual_solutions)} solutions")
        return False
    for solution in solutions:
        image = solution.metric.swap_24()
        if not any(other.matches(image) for other in dual_solutions):
            logger.warning(f"Duality ({n}, {p}): no image of {solution.metric} for p = {n - p}")
            return False
    return True


def split_counts(solutions: list[EinsteinSolution]) -> tuple[int, int]:
    """(Kahler, non-Kahler) counts."""
    kahler = sum(1 for s in solutions if s.kind is SolutionKind.KAHLER)
    return kahler, len(solutions) - kahler

