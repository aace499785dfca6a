"""
Lemma checker for the case analysis.

Every polynomial identity and sign fact the enumeration relies on is
recomputed here in exact arithmetic for one concrete (n, p) and turned into a
LemmaVerdict with its witness values. Lemmas stated for a parameter range are
marked not applicable outside it.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..exactmath.multivariate import BiPoly, MultiPoly
from ..exactmath.polynomial import UniPoly, poly_gcd
from ..exactmath.resultant import resultant, scalar_resultant
from ..flagmodel.space import FlagSpace, make_flag_space
from ..realroots.sturm import count_roots
from ..realroots.isolation import isolate_roots
from ..utils.errors import InvalidParameters, NotDivisible
from ..utils.logger import get_logger
from .case1 import Case1System, build_case1
from .case2 import (
    build_case2,
    expanded_Q,
    factor_resultant_P,
    kahler_x3_values,
    kahler_x4_values,
    x2_from_x3,
)
from .types import LemmaReport, LemmaVerdict

logger = get_logger("solver.lemmas")


@dataclass(frozen=True)
class _Inputs:
    space: FlagSpace
    case1: Case1System
    F1: BiPoly
    F2: BiPoly
    Q: UniPoly

    @property
    def n(self) -> int:
        return self.space.n

    @property
    def p(self) -> int:
        return self.space.p

    @property
    def upper_half(self) -> bool:
        """n/2 <= p <= n - 1"""
        return 2 * self.p >= self.n


def expanded_S(n: int, p: int) -> UniPoly:
    """S_{n,p}(x4): Res_x3(Q, the lex relation) / (32 n^4 (n + p + 1))."""
    return UniPoly(
        [
            8 * (p + 1) ** 2 * (n - 2 * p) ** 2 * (n + p + 1),
            -8 * (p + 1) * (n - 2 * p) * (n + p + 1) * (n**2 - 6 * n * p - 2 * n + 2 * p**2 - 4 * p - 2),
            2 * (
                n**5 - 19 * n**4 * p - 11 * n**4 + 36 * n**3 * p**2 - 18 * n**3 * p - 30 * n**3
                + 22 * n**2 * p**3 + 130 * n**2 * p**2 + 54 * n**2 * p - 22 * n**2
                - 16 * n * p**4 + 4 * n * p**3 + 108 * n * p**2 + 68 * n * p - 4 * n
                - 16 * p**4 - 16 * p**3 + 16 * p**2 + 16 * p
            ),
            4 * n * (n + 1) * (2 * n - p + 1) * (n**2 - 4 * n * p - 2 * p**2 - 8 * p - 2),
            n**2 * (n + 1) * (3 * n + 4) * (2 * n - p + 1),
        ],
        "x4",
    )


def h_value(n: int, p: int) -> int:
    """h_{n,p}; the quarter-discriminant of f'' is 48 (n + 1) h_{n,p}."""
    return (
        n**5 - 5 * n**4 * p - 6 * n**4 + 7 * n**3 * p**2 - 4 * n**3 * p - 14 * n**3
        - 4 * n**2 * p**3 + 20 * n**2 * p**2 + 4 * n**2 * p - 9 * n**2
        + n * p**4 - 14 * n * p**3 + 13 * n * p**2 + 2 * n * p - 2 * n
        + 3 * p**4 - 6 * p**3 + 3 * p**2
    )


def h_in_p(n: int) -> UniPoly:
    """h_{n,p} for fixed n as a quartic in p."""
    return UniPoly(
        [
            n * (n + 1) * (n**3 - 7 * n**2 - 7 * n - 2),
            -n * (5 * n**3 + 4 * n**2 - 4 * n - 2),
            7 * n**3 + 20 * n**2 + 13 * n + 3,
            -2 * (n + 3) * (2 * n + 1),
            n + 3,
        ],
        "p",
    )


def closed_form_betas(n: int, p: int) -> tuple[Fraction, Fraction]:
    """Closed forms of the two tangent-line intersection ordinates."""
    m = n - p
    numer1 = (
        n**6 + 2 * n**5 * p**2 - 3 * n**5 * p + n**5 - 8 * n**4 * p**3 + 6 * n**4 * p**2 - 2 * n**4 * p - 8 * n**4
        + 14 * n**3 * p**4 + 4 * n**3 * p**3 + 18 * n**3 * p**2 + 14 * n**3 * p - 14 * n**3
        - 12 * n**2 * p**5 - 16 * n**2 * p**4 - 4 * n**2 * p**3 + 28 * n**2 * p**2 + 26 * n**2 * p - 6 * n**2
        + 4 * n * p**6 + 8 * n * p**5 - 24 * n * p**4 - 28 * n * p**3 + 12 * n * p**2 + 12 * n * p
        + 12 * p**5 - 12 * p**3
    )
    denom1 = m**3 + p * m**2 + (p**2 + 6 * p + 4) * m + (p + 2) * (p**2 + 4 * p + 2)
    numer2 = (
        2 * n**7 - 7 * n**6 * p + 29 * n**6 + 2 * n**5 * p**3 + 9 * n**5 * p**2 - 66 * n**5 * p + 79 * n**5
        - 8 * n**4 * p**4 + 26 * n**4 * p**3 + 28 * n**4 * p**2 - 178 * n**4 * p + 84 * n**4
        + 14 * n**3 * p**5 - 78 * n**3 * p**4 + 106 * n**3 * p**3 + 72 * n**3 * p**2 - 192 * n**3 * p + 38 * n**3
        - 12 * n**2 * p**6 + 68 * n**2 * p**5 - 172 * n**2 * p**4 + 144 * n**2 * p**3 + 82 * n**2 * p**2
        - 84 * n**2 * p + 6 * n**2
        + 4 * n * p**7 - 20 * n * p**6 + 88 * n * p**5 - 148 * n * p**4 + 64 * n * p**3 + 24 * n * p**2 - 12 * n * p
        - 12 * p**6 + 36 * p**5 - 36 * p**4 + 12 * p**3
    )
    denom2 = m**3 + (p + 12) * m**2 + (p**2 + 18 * p + 16) * m + (p + 2) * (p**2 + 4 * p + 2)
    return (
        Fraction(8 * (p + 1) * numer1, n**3 * denom1),
        Fraction(8 * numer2, n**3 * denom2),
    )


def derive_S(n: int, p: int, Q: UniPoly) -> UniPoly:
    """Res_x3(Q, n x3^2 - 2(n + 2p + 2) x3 + n + n (x3 + 1) x4) / (32 n^4 (n + p + 1))."""
    gens = ("x3", "x4")
    x3, x4 = MultiPoly.symbols(gens)
    lex_relation = n * x3**2 - 2 * (n + 2 * p + 2) * x3 + n + n * (x3 + 1) * x4
    raw = resultant(MultiPoly.from_unipoly(Q, gens), lex_relation, "x3")
    return raw.scale(Fraction(1, 32 * n**4 * (n + p + 1)))


def derive_T(space: FlagSpace, Q: UniPoly) -> UniPoly:
    """Res_x3(Q, P) with P = x2 * den - num of x2(x3), scaled to the leading coefficient of S_{n,n-p}."""
    n, p = space.n, space.p
    gens = ("x3", "x2")
    numer, denom = x2_from_x3(space)
    x2 = MultiPoly.variable("x2", gens)
    P = x2 * MultiPoly.from_unipoly(denom, gens) - MultiPoly.from_unipoly(numer, gens)
    raw = resultant(MultiPoly.from_unipoly(Q, gens), P, "x3")
    return raw.normalized_to(n**2 * (n + 1) * (3 * n + 4) * (n + p + 1))


def _verdict(identifier: str, statement: str, applicable: bool, passed: bool = False, **witnesses) -> LemmaVerdict:
    return LemmaVerdict(
        identifier=identifier,
        statement=statement,
        applicable=applicable,
        passed=applicable and passed,
        witnesses={k: str(v) for k, v in witnesses.items()},
    )


def _lemma_f_at_zero(ctx: _Inputs) -> LemmaVerdict:
    n, p = ctx.n, ctx.p
    value = ctx.case1.f(0)
    expected = 8 * (p + 1) ** 2 * (n + p + 1)
    return _verdict("L1", "f(0) = 8(p+1)^2(n+p+1) > 0", True, value == expected and value > 0, value=value)


def _lemma_derivative_signs(ctx: _Inputs) -> LemmaVerdict:
    statement = "f'(2(p-1)/n) < 0 < f'(2(p+1)/n) for n/2 <= p <= n-1"
    if not ctx.upper_half:
        return _verdict("L2", statement, False)
    n, p = ctx.n, ctx.p
    fp = ctx.case1.f.derivative()
    t1, t2 = Fraction(2 * (p - 1), n), Fraction(2 * (p + 1), n)
    left, right = fp(t1), fp(t2)
    left_expected = Fraction(
        -8 * (n - p + 1) * (2 * n**3 - 3 * n**2 * p + 13 * n**2 - 8 * n * p + 16 * n + 2 * p**3 - 6 * p + 4), n**2
    )
    right_expected = Fraction(
        -8 * (p + 1) * (n - p + 1) * (n**2 - 4 * n * p - 4 * n + 2 * p**2 - 2 * p - 4), n**2
    )
    critical = isolate_roots(fp, t1, t2)
    # u1 is the unique root of f' in (t1, t2]; both lower bounds are reported
    tight = count_roots(fp, t1, t2) == 1
    loose = count_roots(fp, Fraction(p - 1, n), t2) == 1
    passed = (
        left == left_expected
        and right == right_expected
        and left < 0 < right
        and len(critical) == 1
    )
    return _verdict(
        "L2",
        statement,
        True,
        passed,
        f_prime_left=left,
        f_prime_right=right,
        u1=critical[0].interval if critical else "none",
        u1_above_2p_minus_2_over_n=tight,
        u1_above_p_minus_1_over_n=loose,
    )


def _lemma_convexity(ctx: _Inputs) -> LemmaVerdict:
    statement = "f'' > 0 on (0, inf) since h_{n,p} < 0 for n/2 <= p <= n-1"
    if not ctx.upper_half:
        return _verdict("L3", statement, False)
    n, p = ctx.n, ctx.p
    fpp = ctx.case1.f.derivative().derivative()
    a, b, c = fpp.coefficient(2), fpp.coefficient(1), fpp.coefficient(0)
    quarter_discriminant = (b / 2) ** 2 - a * c
    h = h_value(n, p)

    hp = h_in_p(n)
    hpp = hp.derivative().derivative()
    half = Fraction(n, 2)
    convex = hpp(half) > 0 and count_roots(hpp, half, n - 1) == 0
    at_half, at_top = hp(half), hp(n - 1)
    half_expected = Fraction(-n * (3 * n**4 + 73 * n**3 + 152 * n**2 + 116 * n + 32), 16)
    top_expected = -2 * (n**4 + 4 * n**3 + 10 * n**2 + 6 * n - 6)

    passed = (
        quarter_discriminant == 48 * (n + 1) * h
        and hp(p) == h
        and h < 0
        and a > 0
        and convex
        and at_half == half_expected
        and at_top == top_expected
        and at_half < 0
        and at_top < 0
    )
    return _verdict(
        "L3",
        statement,
        True,
        passed,
        h=h,
        quarter_discriminant=quarter_discriminant,
        h_at_half_n=at_half,
        h_at_n_minus_1=at_top,
        h_convex_in_p=convex,
    )


def _intersection(first: tuple[Fraction, Fraction], second: tuple[Fraction, Fraction]) -> Optional[Fraction]:
    """Ordinate where two lines (intercept, slope) meet."""
    (c1, s1), (c2, s2) = first, second
    if s1 == s2:
        return None
    t = (c2 - c1) / (s1 - s2)
    return c1 + s1 * t


def _lemma_tangent_lines(ctx: _Inputs) -> LemmaVerdict:
    statement = "tangent lines at 2(p-1)/n, 2(p+1)/n, 2p/n bound f from below by beta1, beta2 > 0"
    if not ctx.upper_half:
        return _verdict("L4", statement, False)
    n, p = ctx.n, ctx.p
    f = ctx.case1.f
    fp = f.derivative()
    points = (Fraction(2 * (p - 1), n), Fraction(2 * (p + 1), n), Fraction(2 * p, n))
    values = [f(t) for t in points]
    lines = [(v - fp(t) * t, fp(t)) for v, t in zip(values, points)]

    beta_23 = _intersection(lines[1], lines[2])
    beta_13 = _intersection(lines[0], lines[2])
    beta1, beta2 = closed_form_betas(n, p)
    value1_expected = Fraction(16 * (n - p + 1) ** 2 * (2 * n**2 + 4 * n + p**3 - p**2 - p + 1), n**3)
    value2_expected = Fraction(16 * (p + 1) ** 3 * (n - p + 1) ** 2, n**3)
    positive_roots = count_roots(f, 0, None)

    passed = (
        beta_23 == beta1
        and beta_13 == beta2
        and beta1 > 0
        and beta2 > 0
        and values[0] == value1_expected
        and values[1] == value2_expected
        and all(v > 0 for v in values)
        and positive_roots == 0
    )
    return _verdict(
        "L4",
        statement,
        True,
        passed,
        beta1=beta_23,
        beta2=beta_13,
        tangency_values=", ".join(str(v) for v in values),
        positive_roots_of_f=positive_roots,
    )


def _lemma_quartic_Q(ctx: _Inputs) -> LemmaVerdict:
    n, p = ctx.n, ctx.p
    Q = ctx.Q
    at_zero, at_one, at_half = Q(0), Q(1), Q(Fraction(1, 2))
    half_expected = Fraction(
        -5 * n**3 - 16 * n**2 * p - 44 * n**2 + 16 * n * p**2 + 128 * n * p + 80 * n - 128 * p**2 + 128, 16
    )
    if p == 1:
        half_expected = Fraction(-n * (5 * n**2 + 60 * n - 224), 16)
    squarefree = poly_gcd(Q, Q.derivative()).degree == 0
    positive = count_roots(Q, 0, None)
    below_one = count_roots(Q, 0, 1)
    passed = (
        at_zero == n**2 * (3 * n + 4)
        and at_one == 32 * (p + 1) * (n - p + 1)
        and at_half == half_expected
        and at_half < 0
        and Q.is_palindromic()
        and squarefree
        and positive == 4
        and below_one == 2
    )
    return _verdict(
        "L5",
        "Q palindromic with Q(0), Q(1) > 0 > Q(1/2); four simple positive roots, two in (0, 1)",
        True,
        passed,
        Q_at_0=at_zero,
        Q_at_1=at_one,
        Q_at_half=at_half,
        positive_roots=positive,
        roots_in_unit_interval=below_one,
    )


def _lemma_S_signs(ctx: _Inputs, S: UniPoly) -> LemmaVerdict:
    n, p = ctx.n, ctx.p
    identity = S == expanded_S(n, p)
    at_zero = S(0)
    at_top = S(Fraction(2 * (p + 1), n))
    top_expected = Fraction(-16 * (p + 1) ** 2 * (n - p + 1) ** 2 * (n * (p - 1) + 4 * p**2 + 4 * p), n**2)
    passed = (
        identity
        and at_zero == 8 * (p + 1) ** 2 * (n - 2 * p) ** 2 * (n + p + 1)
        and at_top == top_expected
        and at_top < 0
    )
    witnesses = {"S_at_0": at_zero, "S_at_2(p+1)/n": at_top}

    if 2 * p != n:
        m = n - p
        far = S(Fraction(2 * (2 * p - n), n))
        near = S(Fraction(2 * p - n, n))
        far_expected = Fraction(
            8 * (n - 2 * p) ** 2 * (n - p + 1) ** 2 * (5 * n**2 - 9 * n * p + 3 * n + 4 * p**2 - 4 * p), n
        )
        near_expected = Fraction(
            -(n - 2 * p) ** 2
            * (
                (5 * p + 9) * m**4
                + (16 * p**2 + 39 * p + 33) * m**3
                + (18 * p**3 + 67 * p**2 + 79 * p + 40) * m**2
                + (8 * p**4 + 33 * p**3 + 63 * p**2 + 48 * p + 16) * m
                + p**5 + 12 * p**4 + 17 * p**3 + 8 * p**2
            ),
            n**2,
        )
        passed = passed and at_zero > 0 and far == far_expected and far > 0 and near == near_expected and near < 0
        witnesses.update({"S_at_2(2p-n)/n": far, "S_at_(2p-n)/n": near})

    return _verdict(
        "L6",
        "S = Res_x3(Q, the lex relation) / (32 n^4 (n+p+1)) with its sign data",
        True,
        passed,
        matches_expanded_form=identity,
        **witnesses,
    )


def _roots_per_interval(poly: UniPoly, breakpoints: list[Fraction]) -> list[int]:
    bounds: list[Optional[Fraction]] = list(breakpoints) + [None]
    return [count_roots(poly, lo, hi) for lo, hi in zip(bounds, bounds[1:])]


def _lemma_root_patterns(ctx: _Inputs, S: UniPoly, T: UniPoly) -> LemmaVerdict:
    n, p = ctx.n, ctx.p
    statement = "S and T root signs per p < n/2 or p > n/2, with the roots of S interleaved by the breakpoints"
    if 2 * p == n:
        return _verdict("L7", statement, False)
    half, full = Fraction(2 * p - n, n), Fraction(2 * (2 * p - n), n)
    top = Fraction(2 * (p + 1), n)
    if 2 * p < n:
        breakpoints = [full, half, Fraction(0), top]
        s_expected, t_expected = (2, 2), (4, 0)
    else:
        breakpoints = [Fraction(0), half, full, top]
        s_expected, t_expected = (4, 0), (2, 2)

    pattern = _roots_per_interval(S, breakpoints)
    s_counts = (count_roots(S, 0, None), count_roots(S, None, 0))
    t_counts = (count_roots(T, 0, None), count_roots(T, None, 0))
    passed = pattern == [1, 1, 1, 1] and s_counts == s_expected and t_counts == t_expected
    return _verdict(
        "L7",
        statement,
        True,
        passed,
        S_positive_negative=s_counts,
        T_positive_negative=t_counts,
        S_roots_between_breakpoints=pattern,
    )


def _lemma_dualities(ctx: _Inputs, T: UniPoly, S_dual: UniPoly) -> LemmaVerdict:
    dual = ctx.space.dual()
    f_dual = build_case1(dual).f
    g_identity = ctx.case1.g == f_dual
    t_identity = T == S_dual
    return _verdict(
        "L8",
        "g_{n,p} = f_{n,n-p} and T_{n,p} = S_{n,n-p}",
        True,
        g_identity and t_identity,
        g_equals_dual_f=g_identity,
        T_equals_dual_S=t_identity,
    )


def subcase1_quadratics(n: int, p: int) -> tuple[UniPoly, UniPoly]:
    """Reduced sub-case 1 system after removing the Kahler factor n x4 - 2p - 2."""
    first = UniPoly([2 * (p + 1) * (n + p + 1), -n * (n - p + 1)], "x4") * UniPoly(
        [(-n - p - 1) * (n**2 + 2 * n - 2 * p**2 - 2 * p), -n * (n + 1) * (p + 1)], "x4"
    )
    second = UniPoly(
        [
            2 * (p + 1) * (n + p + 1) * (n**2 + 2 * p**2 + 2 * p),
            -n * (3 * n**3 + 3 * n**2 * p + 7 * n**2 + 4 * n * p**2 + 10 * n * p + 6 * n - 2 * p**3 + 2 * p**2 + 6 * p + 2),
            n**2 * (n + 1) * (2 * n - p + 1),
        ],
        "x4",
    )
    return first, second


def _reduced_resultant(ctx: _Inputs, x3: Fraction, x4: Fraction) -> Optional[Fraction]:
    factor = UniPoly([-x4, 1], "x4")
    try:
        reduced = [F.specialize({"x3": x3}).to_unipoly("x4").exact_divide(factor) for F in (ctx.F1, ctx.F2)]
        return scalar_resultant(*reduced)
    except (NotDivisible, InvalidParameters) as exc:
        logger.warning(f"{ctx.space}: sub-case at x3 = {x3} does not reduce: {exc}")
        return None


def _lemma_subcase_scalars(ctx: _Inputs) -> LemmaVerdict:
    n, p = ctx.n, ctx.p
    first, second = subcase1_quadratics(n, p)
    closed = scalar_resultant(first, second)
    expected = (
        -8 * n**6 * (n + 1) ** 3 * (p + 1) * (n - 2 * p) * (n - p + 1) * (n + p + 1) ** 4
        * (n**2 + 2 * n * p + 4 * n - 2 * p**2 + 2)
    )
    derived = [
        _reduced_resultant(ctx, x3, x4)
        for x3, x4 in zip(kahler_x3_values(ctx.space), kahler_x4_values(ctx.space))
    ]
    generic = 2 * p != n
    passed = closed == expected and all(r is not None and (r != 0) == generic for r in derived)
    return _verdict(
        "L9",
        "sub-case (a) resultants vanish exactly when n = 2p",
        True,
        passed,
        subcase1_resultant=closed,
        reduced_resultants_nonzero=[r is not None and r != 0 for r in derived],
    )


def verify_lemmas(n: int, p: int) -> LemmaReport:
    """Recompute L1..L9 for (n, p)."""
    space = make_flag_space(n, p)
    logger.info(f"Verifying lemmas for {space}")
    case1 = build_case1(space)
    case2 = build_case2(space)
    factors = factor_resultant_P(space, case2.F1, case2.F2)
    ctx = _Inputs(space, case1, case2.F1, case2.F2, factors.Q)

    S = derive_S(n, p, factors.Q)
    T = derive_T(space, factors.Q)
    dual_p = n - p
    S_dual = derive_S(n, dual_p, factors.Q if dual_p == p else expanded_Q(n, dual_p))

    report = LemmaReport(n=n, p=p)
    report.verdicts = [
        _lemma_f_at_zero(ctx),
        _lemma_derivative_signs(ctx),
        _lemma_convexity(ctx),
        _lemma_tangent_lines(ctx),
        _lemma_quartic_Q(ctx),
        _lemma_S_signs(ctx, S),
        _lemma_root_patterns(ctx, S, T),
        _lemma_dualities(ctx, T, S_dual),
        _lemma_subcase_scalars(ctx),
    ]
    for verdict in report.failures:
        logger.error(f"{space}: {verdict.identifier} failed ({verdict.statement}): {verdict.witnesses}")
    logger.info(f"{space}: lemmas {report.summary()}")
    return report
