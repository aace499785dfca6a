"""Multivariate polynomials over the rationals in named generators, backed by sympy."""

from fractions import Fraction
from typing import Any, Iterable, Mapping, Optional, Sequence, Union

import sympy as sp
from sympy import QQ, Poly
from sympy.polys.polyerrors import BasePolynomialError

from ..utils.errors import NotDivisible
from .polynomial import Scalar, UniPoly, as_rational, symbol, to_sympy

Exponents = tuple[int, ...]


def symbols_for(gens: Sequence[str]) -> tuple[sp.Symbol, ...]:
    return tuple(symbol(g) for g in gens)


class MultiPoly:
    """
    Polynomial over Q in named generators, wrapping a sympy Poly.

    Rational functions such as the Ricci components are built as sympy
    expressions and enter through from_rational, which clears denominators.
    """

    __slots__ = ("gens", "_poly")

    def __init__(self, gens: Sequence[str], terms: Union[Mapping[Exponents, Any], Iterable] = ()):
        self.gens: tuple[str, ...] = tuple(gens)
        if not self.gens:
            raise ValueError("a MultiPoly needs at least one generator")
        items = terms.items() if isinstance(terms, Mapping) else terms
        data: dict[Exponents, Fraction] = {}
        for exps, c in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(self.gens):
                raise ValueError(f"exponent {exps} does not match generators {self.gens}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            data[exps] = data.get(exps, Fraction(0)) + as_rational(c)
        rep = {e: to_sympy(c) for e, c in data.items() if c != 0}
        syms = symbols_for(self.gens)
        self._poly = Poly.from_dict(rep, *syms, domain=QQ) if rep else Poly(0, *syms, domain=QQ)

    @classmethod
    def _wrap(cls, gens: Sequence[str], poly: Poly) -> "MultiPoly":
        gens = tuple(gens)
        result = object.__new__(BiPoly if len(gens) == 2 else MultiPoly)
        result.gens = gens
        result._poly = poly
        return result

    @staticmethod
    def make(gens: Sequence[str], terms: Union[Mapping[Exponents, Any], Iterable]) -> "MultiPoly":
        """Construct a BiPoly when there are exactly two generators."""
        if len(tuple(gens)) == 2:
            return BiPoly(gens, terms)
        return MultiPoly(gens, terms)

    @classmethod
    def from_expr(cls, expr: Any, gens: Sequence[str]) -> "MultiPoly":
        """A polynomial sympy expression in the named generators."""
        gens = tuple(gens)
        try:
            poly = Poly(expr, *symbols_for(gens), domain=QQ)
        except BasePolynomialError as exc:
            raise ValueError(f"{expr} is not a polynomial in {gens}") from exc
        return cls._wrap(gens, poly)

    @classmethod
    def from_rational(cls, expr: Any, gens: Sequence[str]) -> "MultiPoly":
        """Numerator of a rational expression in lowest terms, with its denominators cleared."""
        numerator, _ = sp.fraction(sp.cancel(sp.together(expr)))
        return cls.from_expr(numerator, gens).clear_denominators()

    @classmethod
    def variable(cls, name: str, gens: Sequence[str]) -> "MultiPoly":
        gens = tuple(gens)
        if name not in gens:
            raise ValueError(f"{name} is not one of {gens}")
        return cls.from_expr(symbol(name), gens)

    @classmethod
    def constant(cls, value: Scalar, gens: Sequence[str]) -> "MultiPoly":
        return cls.from_expr(to_sympy(value), gens)

    @classmethod
    def symbols(cls, gens: Sequence[str]) -> tuple["MultiPoly", ...]:
        return tuple(cls.variable(g, gens) for g in gens)

    @classmethod
    def from_unipoly(cls, f: UniPoly, gens: Sequence[str]) -> "MultiPoly":
        gens = tuple(gens)
        if f.var not in gens and not f.is_constant:
            raise ValueError(f"{f.var} is not one of {gens}")
        return cls.from_expr(f.as_expr, gens)

    @property
    def as_poly(self) -> Poly:
        return self._poly

    @property
    def as_expr(self) -> sp.Expr:
        return self._poly.as_expr()

    @property
    def terms(self) -> dict[Exponents, Fraction]:
        return {e: as_rational(c) for e, c in self._poly.as_dict().items()}

    @property
    def is_zero(self) -> bool:
        return self._poly.is_zero

    def __len__(self) -> int:
        return len(self._poly.as_dict())

    def _index(self, var: str) -> int:
        try:
            return self.gens.index(var)
        except ValueError:
            raise ValueError(f"{var} is not one of {self.gens}") from None

    def _symbol(self, var: str) -> sp.Symbol:
        return symbol(self.gens[self._index(var)])

    def _coerce(self, other: Any) -> Optional["MultiPoly"]:
        if isinstance(other, MultiPoly):
            if other.gens != self.gens:
                raise ValueError(f"generator mismatch: {self.gens} vs {other.gens}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.gens)
        return None

    def __add__(self, other: Any) -> "MultiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MultiPoly._wrap(self.gens, self._poly + o._poly)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._wrap(self.gens, -self._poly)

    def __sub__(self, other: Any) -> "MultiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MultiPoly._wrap(self.gens, self._poly - o._poly)

    def __rsub__(self, other: Any) -> "MultiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MultiPoly._wrap(self.gens, o._poly - self._poly)

    def __mul__(self, other: Any) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return MultiPoly._wrap(self.gens, self._poly.mul_ground(to_sympy(other)))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MultiPoly._wrap(self.gens, self._poly * o._poly)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "MultiPoly":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (1 / as_rational(other))

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise ValueError("negative exponent")
        return MultiPoly._wrap(self.gens, self._poly ** exponent)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, MultiPoly):
            return self.gens == other.gens and self._poly == other._poly
        if isinstance(other, (int, Fraction)):
            return self._poly == MultiPoly.constant(other, self.gens)._poly
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.gens, frozenset(self._poly.as_dict().items())))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.gens}, {self})"

    def __str__(self) -> str:
        return str(self.as_expr)

    def coefficient(self, exps: Exponents) -> Fraction:
        return as_rational(self._poly.nth(*exps))

    def degree(self, var: str) -> int:
        """Largest exponent of var, or -1 for the zero polynomial."""
        if self.is_zero:
            return -1
        return int(self._poly.degree(self._symbol(var)))

    def min_degree(self, var: str) -> int:
        i = self._index(var)
        return min((e[i] for e in self._poly.monoms()), default=0)

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self._poly.as_dict()}

    def is_homogeneous(self) -> bool:
        return len(self.total_degrees()) <= 1

    def involves(self, var: str) -> bool:
        return self.degree(var) > 0

    def leading_term(self) -> tuple[Exponents, Fraction]:
        """Lexicographically largest term in generator order."""
        exps, c = self._poly.terms(order="lex")[0]
        return tuple(exps), as_rational(c)

    def evaluate(self, values: Union[Mapping[str, Any], Sequence[Any]]) -> Any:
        """Evaluate at a point; values may be Fractions or RatIntervals."""
        if isinstance(values, Mapping):
            point = [values[g] for g in self.gens]
        else:
            point = list(values)
        total: Any = Fraction(0)
        for exps, c in self.terms.items():
            term: Any = c
            for v, e in zip(point, exps):
                if e:
                    term = term * v ** e
            total = total + term
        return total

    def specialize(self, assignments: Mapping[str, Scalar]) -> "MultiPoly":
        """Substitute rational values for some generators and drop them."""
        keep = [g for g in self.gens if g not in assignments]
        if not keep:
            raise ValueError("specialize must leave at least one generator")
        values = {symbol(g): to_sympy(v) for g, v in assignments.items() if g in self.gens}
        return MultiPoly.from_expr(self.as_expr.subs(values), keep)

    def drop(self, var: str) -> "MultiPoly":
        """Remove a generator that does not occur."""
        if self.involves(var):
            raise ValueError(f"{var} still occurs in {self}")
        return MultiPoly.from_expr(self.as_expr, [g for g in self.gens if g != var])

    def to_unipoly(self, var: Optional[str] = None) -> UniPoly:
        """Convert a polynomial in a single generator."""
        if len(self.gens) > 1:
            raise ValueError(f"{self.gens} has more than one generator")
        return UniPoly.from_sympy(self._poly, self.gens[0])

    def coefficients_in(self, var: str) -> list["MultiPoly"]:
        """Coefficients of var^0, var^1, ... as polynomials in the other generators."""
        rest = [g for g in self.gens if g != var]
        if not rest:
            raise ValueError(f"no generators left besides {var}")
        coeffs = Poly(self.as_expr, self._symbol(var)).all_coeffs()
        return [MultiPoly.from_expr(c, rest) for c in reversed(coeffs)]

    def derivative(self, var: str) -> "MultiPoly":
        return MultiPoly._wrap(self.gens, self._poly.diff(self._symbol(var)))

    def strip_monomial_content(self) -> "MultiPoly":
        """Divide by the largest monomial dividing every term."""
        if self.is_zero:
            return self
        _, rest = self._poly.terms_gcd()
        return MultiPoly._wrap(self.gens, rest)

    def content(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        denominator, integral = self._poly.clear_denoms(convert=True)
        return as_rational(integral.content()) / as_rational(denominator)

    def primitive(self) -> "MultiPoly":
        """Coprime integer coefficients, lexicographically leading coefficient positive."""
        if self.is_zero:
            return self
        p = self * (1 / self.content())
        return -p if p.leading_term()[1] < 0 else p

    def clear_denominators(self) -> "MultiPoly":
        """Smallest integer polynomial proportional to self up to a monomial factor."""
        return self.strip_monomial_content().primitive()

    def proportionality(self, other: "MultiPoly") -> Optional[Fraction]:
        """The scalar c with self == c * other, or None."""
        if self.gens != other.gens or self.is_zero or other.is_zero:
            return None
        exps, c = other.leading_term()
        ratio = self.coefficient(exps) / c
        if ratio == 0 or self != other * ratio:
            return None
        return ratio

    def _cleared(self, replacements: Mapping[str, tuple[Any, Any]]) -> sp.Expr:
        """self with g -> num/den for each replaced g, times den^deg_g(self)."""
        values = {}
        scale = sp.Integer(1)
        for g, (num, den) in replacements.items():
            values[self._symbol(g)] = num / den
            scale = scale * den ** max(self.degree(g), 0)
        return sp.cancel(self.as_expr.subs(values, simultaneous=True) * scale)

    def substitute_fraction(self, var: str, numer: "MultiPoly", denom: "MultiPoly") -> "MultiPoly":
        """
        Numerator of self(var = numer/denom) after multiplying by denom^deg_var(self).

        numer and denom use self's generators; the result no longer involves var
        (unless numer or denom do) but keeps the same generators.
        """
        cleared = self._cleared({var: (numer.as_expr, denom.as_expr)})
        return MultiPoly.from_expr(cleared, self.gens)

    def substitute_univariate(self, target: str, fractions: Mapping[str, tuple[UniPoly, UniPoly]]) -> UniPoly:
        """
        Numerator, as a UniPoly in target, after replacing every other generator g
        by fractions[g] = (num, den) and clearing the denominators den^deg_g(self).
        """
        self._index(target)
        replacements = {
            g: (num.with_var(target).as_expr, den.with_var(target).as_expr)
            for g, (num, den) in fractions.items()
            if g != target and g in self.gens
        }
        return UniPoly.from_sympy(self._cleared(replacements), target)

    def divide_linear(self, var: str, root: Scalar) -> tuple["MultiPoly", "MultiPoly"]:
        """Division by (var - root) in var: returns (quotient, remainder)."""
        x = self._symbol(var)
        others = [symbol(g) for g in self.gens if g != var]
        divisor = Poly(x - to_sympy(root), x, *others, domain=QQ)
        q, r = Poly(self.as_expr, x, *others, domain=QQ).div(divisor)
        return MultiPoly.from_expr(q.as_expr(), self.gens), MultiPoly.from_expr(r.as_expr(), self.gens)

    def exact_divide_linear(self, var: str, root: Scalar) -> "MultiPoly":
        q, r = self.divide_linear(var, root)
        if not r.is_zero:
            raise NotDivisible(f"{self} is not divisible by ({var} - {root})")
        return q

    def strip_linear_factor(self, var: str, root: Scalar) -> tuple["MultiPoly", int]:
        """Divide out (var - root) as often as possible; returns (rest, multiplicity)."""
        count = 0
        current = self
        while not current.is_zero:
            q, r = current.divide_linear(var, root)
            if not r.is_zero:
                break
            current, count = q, count + 1
        return current, count


class BiPoly(MultiPoly):
    """MultiPoly in exactly two generators."""

    __slots__ = ()

    def __init__(self, gens: Sequence[str], terms: Union[Mapping[Exponents, Any], Iterable] = ()):
        if len(tuple(gens)) != 2:
            raise ValueError(f"BiPoly needs two generators, got {tuple(gens)}")
        super().__init__(gens, terms)

    def other(self, var: str) -> str:
        a, b = self.gens
        if var == a:
            return b
        if var == b:
            return a
        raise ValueError(f"{var} is not one of {self.gens}")

    def univariate_coefficients(self, var: str) -> list[UniPoly]:
        """Coefficients of var^k as UniPolys in the other generator."""
        rest = self.other(var)
        return [c.to_unipoly(rest) for c in self.coefficients_in(var)]
