"""Exact rational polynomial arithmetic and resultants on top of sympy."""

from .multivariate import BiPoly, MultiPoly
from .polynomial import (
    Rational,
    UniPoly,
    as_rational,
    exact_divide,
    poly_derivative,
    poly_eval,
    poly_gcd,
    rational_roots,
    squarefree_decomposition,
    squarefree_part,
    symbol,
)
from .resultant import checked_resultant, resultant, scalar_resultant, sylvester_resultant

__all__ = [
    "BiPoly",
    "MultiPoly",
    "Rational",
    "UniPoly",
    "as_rational",
    "checked_resultant",
    "exact_divide",
    "poly_derivative",
    "poly_eval",
    "poly_gcd",
    "rational_roots",
    "resultant",
    "scalar_resultant",
    "squarefree_decomposition",
    "squarefree_part",
    "sylvester_resultant",
    "symbol",
]
