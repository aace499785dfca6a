"""Univariate polynomials with exact rational coefficients, backed by sympy."""

from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, Optional, Union

import sympy as sp
from sympy import QQ, Poly
from sympy.polys.polyerrors import ExactQuotientFailed

from ..utils.errors import InvalidParameters, NotDivisible

Rational = Fraction
Scalar = Union[int, Fraction]


def as_rational(value: Any) -> Fraction:
    """Coerce an int, Fraction, sympy Rational or "a/b" string to a Fraction."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or a string")
    if isinstance(value, sp.Basic):
        if not value.is_Rational:
            raise TypeError(f"{value} is not a rational number")
        return Fraction(int(value.p), int(value.q))
    return Fraction(value)


def to_sympy(value: Any) -> sp.Rational:
    v = as_rational(value)
    return sp.Rational(v.numerator, v.denominator)


def symbol(name: str) -> sp.Symbol:
    """The sympy generator behind a variable name; every variable here is a positive quantity."""
    return sp.Symbol(name, positive=True)


class UniPoly:
    """
    Polynomial in one variable, coefficients lowest degree first.

    Instances are immutable. Algebra (division, gcd, square-free
    decomposition, resultants) runs on the sympy Poly over QQ; evaluation
    stays generic so RatIntervals pass through unchanged.
    """

    __slots__ = ("_coeffs", "var", "_poly")

    def __init__(self, coeffs: Iterable[Any] = (), var: str = "x"):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(cs)
        self.var = var
        self._poly: Optional[Poly] = None

    @classmethod
    def from_sympy(cls, poly: Union[Poly, sp.Expr], var: Optional[str] = None) -> "UniPoly":
        """Wrap a univariate sympy Poly, or expand an expression in `var`."""
        if not isinstance(poly, Poly):
            if var is None:
                raise ValueError("a variable name is needed to read an expression")
            poly = Poly(poly, symbol(var), domain=QQ)
        if len(poly.gens) != 1:
            raise ValueError(f"{poly} is not univariate")
        return cls(reversed(poly.all_coeffs()), var or str(poly.gen))

    @classmethod
    def zero(cls, var: str = "x") -> "UniPoly":
        return cls((), var)

    @classmethod
    def constant(cls, value: Scalar, var: str = "x") -> "UniPoly":
        return cls((value,), var)

    @classmethod
    def variable(cls, var: str = "x") -> "UniPoly":
        return cls((0, 1), var)

    @property
    def as_poly(self) -> Poly:
        if self._poly is None:
            coeffs = [to_sympy(c) for c in reversed(self._coeffs)] or [sp.Integer(0)]
            self._poly = Poly(coeffs, symbol(self.var), domain=QQ)
        return self._poly

    @property
    def as_expr(self) -> sp.Expr:
        return self.as_poly.as_expr()

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._coeffs)

    def __call__(self, x: Any) -> Any:
        """Horner evaluation; the value has the type of x (Fraction, RatInterval or float)."""
        result = x * 0 + self.leading_coefficient
        for c in reversed(self._coeffs[:-1]):
            result = result * x + c
        return result

    def sign_at(self, x: Scalar) -> int:
        value = self(as_rational(x))
        return (value > 0) - (value < 0)

    def _coerce(self, other: Any) -> Optional["UniPoly"]:
        if isinstance(other, UniPoly):
            if other.var != self.var and not (other.is_constant or self.is_constant):
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.constant(other, self.var)
        return None

    def _pick_var(self, other: "UniPoly") -> str:
        return self.var if not self.is_constant or other.is_constant else other.var

    def _combine(self, other: Any, op: Callable[[Poly, Poly], Poly]) -> "UniPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        var = self._pick_var(o)
        return UniPoly.from_sympy(op(self.with_var(var).as_poly, o.with_var(var).as_poly), var)

    def __add__(self, other: Any) -> "UniPoly":
        return self._combine(other, lambda a, b: a + b)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self._coeffs], self.var)

    def __sub__(self, other: Any) -> "UniPoly":
        return self._combine(other, lambda a, b: a - b)

    def __rsub__(self, other: Any) -> "UniPoly":
        return self._combine(other, lambda a, b: b - a)

    def __mul__(self, other: Any) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self._coeffs], self.var)
        return self._combine(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UniPoly":
        if exponent < 0:
            raise ValueError("negative exponent")
        return UniPoly.from_sympy(self.as_poly ** exponent, self.var)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, UniPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == UniPoly.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self._coeffs]}, var={self.var!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                power = self.var if k == 1 else f"{self.var}^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def derivative(self) -> "UniPoly":
        return UniPoly.from_sympy(self.as_poly.diff(), self.var)

    def _divisor(self, divisor: Any) -> "UniPoly":
        d = self._coerce(divisor)
        if d is None:
            raise TypeError(f"cannot divide by {type(divisor).__name__}")
        if d.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        return d.with_var(self.var)

    def divmod(self, divisor: Any) -> tuple["UniPoly", "UniPoly"]:
        """Euclidean division over Q: self = q * divisor + r, deg r < deg divisor."""
        q, r = self.as_poly.div(self._divisor(divisor).as_poly)
        return UniPoly.from_sympy(q, self.var), UniPoly.from_sympy(r, self.var)

    def rem(self, divisor: Any) -> "UniPoly":
        return self.divmod(divisor)[1]

    def exact_divide(self, divisor: Any) -> "UniPoly":
        """Quotient of an exact division, else NotDivisible."""
        d = self._divisor(divisor)
        try:
            return UniPoly.from_sympy(self.as_poly.exquo(d.as_poly), self.var)
        except ExactQuotientFailed:
            raise NotDivisible(f"({self}) is not divisible by ({d}); remainder {self.rem(d)}") from None

    def divides(self, other: "UniPoly") -> bool:
        return other.rem(self).is_zero

    def scale(self, factor: Scalar) -> "UniPoly":
        return self * as_rational(factor)

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        return UniPoly.from_sympy(self.as_poly.monic(), self.var)

    def content(self) -> Fraction:
        """Positive rational c such that self / c has coprime integer coefficients."""
        if self.is_zero:
            return Fraction(0)
        denominator, integral = self.as_poly.clear_denoms(convert=True)
        return as_rational(integral.content()) / as_rational(denominator)

    def primitive(self) -> "UniPoly":
        """Integer-coefficient representative with positive leading coefficient."""
        if self.is_zero:
            return self
        p = self * (1 / self.content())
        return -p if p.leading_coefficient < 0 else p

    def normalized_to(self, leading: Scalar) -> "UniPoly":
        """Scalar multiple with the given leading coefficient."""
        return self * (as_rational(leading) / self.leading_coefficient)

    def is_proportional_to(self, other: "UniPoly") -> bool:
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return self.monic() == other.monic()

    def is_palindromic(self) -> bool:
        return self._coeffs == tuple(reversed(self._coeffs))

    def with_var(self, var: str) -> "UniPoly":
        if var == self.var:
            return self
        return UniPoly(self._coeffs, var)


def poly_eval(f: UniPoly, x: Scalar) -> Fraction:
    return f(as_rational(x))


def poly_derivative(f: UniPoly) -> UniPoly:
    return f.derivative()


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic greatest common divisor over Q."""
    if f.is_zero and g.is_zero:
        raise InvalidParameters("gcd(0, 0) is undefined")
    var = f.var if not f.is_zero else g.var
    common = f.with_var(var).as_poly.gcd(g.with_var(var).as_poly)
    return UniPoly.from_sympy(common, var).monic()


def exact_divide(f: UniPoly, g: UniPoly) -> UniPoly:
    return f.exact_divide(g)


def squarefree_part(f: UniPoly) -> UniPoly:
    if f.degree < 1:
        return f.monic()
    return UniPoly.from_sympy(f.as_poly.sqf_part(), f.var).monic()


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Monic square-free pairwise coprime factors with multiplicities; constants are dropped."""
    if f.degree < 1:
        return []
    _, factors = f.as_poly.sqf_list()
    return [(UniPoly.from_sympy(p, f.var).monic(), k) for p, k in factors if p.degree() > 0]


def rational_roots(f: UniPoly) -> list[Fraction]:
    """Distinct rational roots, read off the linear factors of f over Q."""
    if f.is_zero:
        raise InvalidParameters("the zero polynomial has no isolated roots")
    if f.degree < 1:
        return []
    _, factors = f.as_poly.factor_list()
    roots = []
    for factor, _ in factors:
        if factor.degree() == 1:
            slope, offset = factor.all_coeffs()
            roots.append(-as_rational(offset) / as_rational(slope))
    return sorted(roots)
