"""
Resultants via sympy's subresultant remainder sequence, with a fraction-free
Sylvester determinant as an independent cross-check.

Both follow the Sylvester convention with f's rows first, so
Res_y(y - a, y - b) = a - b.
"""

from fractions import Fraction
from typing import Union

import sympy as sp
from sympy.polys.subresultants_qq_zz import sylvester

from ..utils.errors import InvalidParameters
from ..utils.logger import get_logger
from .multivariate import MultiPoly
from .polynomial import UniPoly, as_rational, symbol

logger = get_logger("exactmath.resultant")

Polynomial = Union[UniPoly, MultiPoly]


def _operands(f: Polynomial, g: Polynomial, eliminate: str) -> tuple[sp.Expr, sp.Expr, str]:
    """Both inputs as expressions plus the surviving variable ("" for univariate inputs)."""
    for poly in (f, g):
        if isinstance(poly, UniPoly):
            if poly.is_zero:
                raise InvalidParameters("resultant of a zero polynomial")
            if poly.var != eliminate or poly.degree < 1:
                raise InvalidParameters(f"{poly} does not involve {eliminate}")
        elif isinstance(poly, MultiPoly):
            if poly.is_zero:
                raise InvalidParameters("resultant of a zero polynomial")
            if len(poly.gens) != 2:
                raise InvalidParameters(f"expected two generators, got {poly.gens}")
            if poly.degree(eliminate) < 1:
                raise InvalidParameters(f"{poly} does not involve {eliminate}")
        else:
            raise TypeError(f"cannot take the resultant of {type(poly).__name__}")

    if isinstance(f, UniPoly) and isinstance(g, UniPoly):
        return f.as_expr, g.as_expr, ""
    if isinstance(f, UniPoly) or isinstance(g, UniPoly):
        raise InvalidParameters("mixed univariate and bivariate inputs")
    if f.gens != g.gens:
        raise InvalidParameters(f"generator mismatch: {f.gens} vs {g.gens}")
    rest = f.gens[1] if f.gens[0] == eliminate else f.gens[0]
    return f.as_expr, g.as_expr, rest


def _as_unipoly(value: sp.Expr, var: str) -> UniPoly:
    return UniPoly.from_sympy(sp.expand(value), var)


def resultant(f: Polynomial, g: Polynomial, eliminate: str) -> UniPoly:
    """
    Res_eliminate(f, g) as a UniPoly in the remaining variable.

    For two univariate inputs the result is a constant UniPoly in `eliminate`.
    """
    a, b, rest = _operands(f, g, eliminate)
    value = sp.resultant(a, b, symbol(eliminate))
    return _as_unipoly(value, rest or eliminate)


def sylvester_resultant(f: Polynomial, g: Polynomial, eliminate: str) -> UniPoly:
    """Same value as resultant(), via a Bareiss determinant of the Sylvester matrix."""
    a, b, rest = _operands(f, g, eliminate)
    value = sylvester(a, b, symbol(eliminate)).det(method="bareiss")
    return _as_unipoly(value, rest or eliminate)


def scalar_resultant(f: UniPoly, g: UniPoly) -> Fraction:
    """Resultant of two univariate polynomials in the same variable."""
    if f.var != g.var and not (f.is_constant or g.is_constant):
        raise InvalidParameters(f"variable mismatch: {f.var} vs {g.var}")
    return as_rational(resultant(f, g.with_var(f.var), f.var).coefficient(0))


def checked_resultant(f: Polynomial, g: Polynomial, eliminate: str) -> UniPoly:
    """resultant() confirmed against the Sylvester determinant."""
    fast = resultant(f, g, eliminate)
    slow = sylvester_resultant(f, g, eliminate)
    if fast != slow:
        logger.error(f"Resultant methods disagree: {fast} vs {slow}")
        raise ArithmeticError("subresultant and Sylvester resultants differ")
    return fast
