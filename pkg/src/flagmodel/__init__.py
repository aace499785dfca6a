"""Geometry of Sp(n)/(U(p) x U(n-p)): Ricci components and the Einstein system."""

from .einstein import (
    EinsteinSystem,
    expanded_system,
    einstein_constant,
    einstein_system,
    kahler_einstein_metrics,
)
from .ricci import Metric4, RicciComponents, ricci_components, ricci_formula, ricci_generic
from .space import FlagSpace, TripleTable, make_flag_space

__all__ = [
    "EinsteinSystem",
    "FlagSpace",
    "Metric4",
    "RicciComponents",
    "TripleTable",
    "expanded_system",
    "einstein_constant",
    "einstein_system",
    "kahler_einstein_metrics",
    "make_flag_space",
    "ricci_components",
    "ricci_formula",
    "ricci_generic",
]
