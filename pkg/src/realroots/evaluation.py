"""Interval evaluation of rational functions at isolated roots."""

from fractions import Fraction
from typing import Callable

from ..exactmath.polynomial import UniPoly
from ..utils.errors import DenominatorStraddlesZero, PositivityUndecided
from ..utils.logger import get_logger
from .intervals import RatInterval
from .isolation import IsolatedRoot, refine

logger = get_logger("realroots.evaluation")


def interval_eval_rational(numer: UniPoly, denom: UniPoly, x: RatInterval) -> RatInterval:
    """
    Enclosure of numer/denom over x.

    Raises DenominatorStraddlesZero when the enclosure of denom contains 0;
    the caller refines x and retries.
    """
    if x.is_exact:
        d = denom(x.lo)
        if d == 0:
            raise DenominatorStraddlesZero(f"{denom} vanishes at {x.lo}")
        return RatInterval.point(numer(x.lo) / d)
    d = denom(x)
    if d.contains_zero():
        raise DenominatorStraddlesZero(f"{denom} over {x} gives {d}")
    return numer(x) / d


def enclose(
    evaluate: Callable[[RatInterval], RatInterval],
    root: IsolatedRoot,
    minimum_width: Fraction,
    decided: Callable[[RatInterval], bool] = lambda value: value.sign() is not None,
) -> tuple[RatInterval, IsolatedRoot]:
    """
    Refine root until evaluate(root.interval) satisfies `decided`.

    Returns the enclosure and the refined root. Raises PositivityUndecided
    once the root interval would have to shrink below minimum_width.
    """
    current = root
    while True:
        try:
            value = evaluate(current.interval)
            if decided(value):
                return value, current
        except DenominatorStraddlesZero:
            pass
        if current.is_exact or current.width < minimum_width:
            logger.error(f"Could not decide a value at the root of {root.poly} in {root.interval}")
            raise PositivityUndecided(
                f"undecided at the root of {root.poly} even at width {current.width}"
            )
        current = refine(current, current.width / 2)


def certified_sign(numer: UniPoly, denom: UniPoly, root: IsolatedRoot, minimum_width: Fraction) -> int:
    """Sign of numer/denom at the root, certified by refinement."""
    value, _ = enclose(lambda x: interval_eval_rational(numer, denom, x), root, minimum_width)
    return value.sign()
