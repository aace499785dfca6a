"""Certified coordinates of algebraic solutions."""

from fractions import Fraction
from typing import Optional

from ..exactmath.polynomial import UniPoly, poly_gcd
from ..realroots.evaluation import enclose, interval_eval_rational
from ..realroots.intervals import RatInterval
from ..realroots.isolation import IsolatedRoot, refine
from ..utils.config import get_config
from ..utils.errors import DegenerateDenominator, MembershipFailure
from ..utils.logger import get_logger

logger = get_logger("solver.certify")


def widths(certification_width: Optional[Fraction] = None, minimum_width: Optional[Fraction] = None) -> tuple[Fraction, Fraction]:
    """Configured (certification, minimum) widths unless given explicitly."""
    config = get_config()
    if certification_width is None:
        certification_width = config.certification_width
    if minimum_width is None:
        minimum_width = config.minimum_width
    return certification_width, minimum_width


def positive_root(root: IsolatedRoot, minimum_width: Fraction) -> IsolatedRoot:
    """Refine a positive root until its whole interval lies right of 0."""
    _, refined = enclose(lambda x: x, root, minimum_width, decided=lambda v: v.is_positive())
    return refined


def rational_sign(numer: UniPoly, denom: UniPoly, root: IsolatedRoot, minimum_width: Fraction) -> tuple[int, IsolatedRoot]:
    """Certified sign of numer/denom at the root, plus the root as refined."""
    value, refined = enclose(lambda x: interval_eval_rational(numer, denom, x), root, minimum_width)
    return value.sign(), refined


def rational_enclosure(numer: UniPoly, denom: UniPoly, root: IsolatedRoot, minimum_width: Fraction) -> RatInterval:
    """Enclosure of numer/denom at the root with a sign-definite denominator."""
    value, _ = enclose(
        lambda x: interval_eval_rational(numer, denom, x),
        root,
        minimum_width,
        decided=lambda v: True,
    )
    return value


def at_width(root: IsolatedRoot, certification_width: Fraction) -> IsolatedRoot:
    return refine(root, certification_width)


def check_nonvanishing(denom: UniPoly, defining: UniPoly, label: str) -> None:
    """Raise DegenerateDenominator if denom shares a root with the defining polynomial."""
    if denom.is_zero or poly_gcd(denom, defining).degree > 0:
        logger.error(f"Denominator of {label} vanishes at a root of {defining}")
        raise DegenerateDenominator(f"denominator {denom} of {label} shares a root with {defining}")


def check_membership(cleared: UniPoly, defining: UniPoly, label: str) -> None:
    """The cleared numerator must vanish at every root of the defining polynomial."""
    if not defining.divides(cleared):
        logger.error(f"{label}: cleared numerator not divisible by {defining}")
        raise MembershipFailure(f"{label} is not divisible by {defining}")
    logger.debug(f"{label}: divisible by the defining polynomial")
