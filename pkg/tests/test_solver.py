"""Tests for the case analysis and the enumeration pipeline."""

from fractions import Fraction

import pytest

from src.exactmath import UniPoly
from src.flagmodel import Metric4, einstein_system, make_flag_space
from src.realroots import RatInterval
from src.solver import (
    CaseOrigin,
    SolutionKind,
    build_case1,
    build_case2,
    duality_check,
    enumerate_einstein,
    factor_resultant_P,
    relabel_partner,
    solve_case1,
    solve_case2a,
    solve_case2b,
    split_counts,
)
from src.solver.case1 import expanded_f, expanded_g
from src.solver.case2 import SUBCASES, expanded_Q, kahler_x3_values, x4_from_x3, x2_from_x3

KAHLER_31 = {
    (Fraction(1), Fraction(10, 3), Fraction(7, 3), Fraction(4, 3)),
    (Fraction(1), Fraction(2), Fraction(3), Fraction(4)),
    (Fraction(1), Fraction(10, 7), Fraction(3, 7), Fraction(4, 7)),
    (Fraction(1), Fraction(2, 3), Fraction(1, 3), Fraction(4, 3)),
}

KAHLER_42 = {
    (Fraction(1), Fraction(7, 2), Fraction(5, 2), Fraction(3, 2)),
    (Fraction(1), Fraction(3, 2), Fraction(5, 2), Fraction(7, 2)),
    (Fraction(1), Fraction(7, 5), Fraction(2, 5), Fraction(3, 5)),
    (Fraction(1), Fraction(3, 5), Fraction(2, 5), Fraction(7, 5)),
}

SMALL_PAIRS = [(3, 1), (3, 2), (4, 1), (4, 2), (5, 3)]


def _floats(solution):
    return tuple(float(v.midpoint) if isinstance(v, RatInterval) else float(v) for v in solution.metric)


class TestCase1:
    """Tests for the x1 = x3 branch."""

    def test_f_and_g_n3(self, f32):
        """Test the derived eliminants against their expanded forms."""
        case1 = build_case1(make_flag_space(3, 2))
        assert case1.f == f32
        assert build_case1(make_flag_space(3, 1)).g == f32

    @pytest.mark.parametrize("n,p", SMALL_PAIRS)
    def test_expanded_forms(self, n, p):
        """Test that build_case1 returns the expanded f and g."""
        case1 = build_case1(make_flag_space(n, p))
        assert case1.f == expanded_f(n, p)
        assert case1.g == expanded_g(n, p)

    def test_g_is_dual_f(self):
        """Test g_{n,p} = f_{n,n-p} on the expanded forms."""
        for n in range(3, 12):
            for p in range(1, n):
                assert expanded_g(n, p) == expanded_f(n, n - p)

    @pytest.mark.parametrize("n,p", SMALL_PAIRS)
    def test_no_solutions(self, n, p):
        """Test that Case 1 contributes nothing."""
        assert solve_case1(make_flag_space(n, p)) == []


class TestCase2Construction:
    """Tests for F1, F2 and the resultant split."""

    def test_quartic_n3_p1(self, space31, q31):
        """Test the quartic factor for (3, 1)."""
        case2 = build_case2(space31)
        factors = factor_resultant_P(space31, case2.F1, case2.F2)
        assert factors.Q == q31
        assert factors.scalar != 0
        assert factors.linear_roots == kahler_x3_values(space31)

    def test_q_palindromic(self):
        """Test a_k = a_{4-k} for the expanded quartic."""
        for n in range(3, 15):
            for p in range(1, n):
                assert expanded_Q(n, p).is_palindromic()

    def test_q_at_one(self, q31):
        """Test Q_{3,1}(1) = 32 (p + 1)(n - p + 1)."""
        assert q31(1) == 192

    def test_self_dual_factorization(self, space42):
        """Test that repeated Kahler x3 values still divide out for n = 2p."""
        case2 = build_case2(space42)
        factors = factor_resultant_P(space42, case2.F1, case2.F2)
        assert factors.Q == expanded_Q(4, 2)
        assert kahler_x3_values(space42)[0] == kahler_x3_values(space42)[1] == Fraction(5, 2)

    def test_relations_at_kahler_free_root(self):
        """Test the x4(x3) and x2(x3) relations numerically at the non-Kahler root of Q_{3,1}."""
        space = make_flag_space(3, 1)
        x3 = 0.50076
        x4_numer, x4_denom = x4_from_x3(space)
        x2_numer, x2_denom = x2_from_x3(space)
        assert x4_numer(x3) / x4_denom(x3) == pytest.approx(0.72371, abs=1e-4)
        assert x2_numer(x3) / x2_denom(x3) == pytest.approx(1.1686, abs=1e-3)


class TestCase2Solutions:
    """Tests for sub-cases (a) and (b)."""

    def test_subcase_a_n3_p1(self, space31):
        """Test that sub-case (a) yields exactly the Kahler-Einstein metrics."""
        case2 = build_case2(space31)
        solutions = solve_case2a(space31, kahler_x3_values(space31), case2.F1, case2.F2)
        assert {s.metric.as_tuple() for s in solutions} == KAHLER_31
        assert all(s.kind is SolutionKind.KAHLER for s in solutions)
        assert {s.origin for s in solutions} == set(SUBCASES)
        by_x3 = {s.metric.x3: s.origin for s in solutions}
        assert by_x3[Fraction(7, 3)] is CaseOrigin.CASE2A_SUB1
        assert by_x3[Fraction(3)] is CaseOrigin.CASE2A_SUB2
        assert by_x3[Fraction(3, 7)] is CaseOrigin.CASE2A_SUB3
        assert by_x3[Fraction(1, 3)] is CaseOrigin.CASE2A_SUB4

    def test_subcase_a_self_dual(self, space42):
        """Test the two Kahler metrics sharing each x3 when n = 2p."""
        case2 = build_case2(space42)
        solutions = solve_case2a(space42, kahler_x3_values(space42), case2.F1, case2.F2)
        assert {s.metric.as_tuple() for s in solutions} == KAHLER_42

    def test_subcase_b_n3_p1(self, space31, q31):
        """Test the two certified non-Kahler solutions for (3, 1)."""
        solutions = solve_case2b(space31, q31)
        assert len(solutions) == 2
        assert all(s.kind is SolutionKind.NON_KAHLER for s in solutions)
        assert all(s.origin is CaseOrigin.CASE2B for s in solutions)

        small = min(solutions, key=lambda s: s.x3_key)
        _, x2, x3, x4 = _floats(small)
        assert x3 == pytest.approx(0.50076, abs=1e-4)
        assert x4 == pytest.approx(0.72371, abs=1e-4)
        assert x2 == pytest.approx(1.1686, abs=1e-3)

    def test_subcase_b_self_dual(self, space42):
        """Test that roots of Q making x4 and x2 vanish are dropped for (4, 2)."""
        solutions = solve_case2b(space42, expanded_Q(4, 2))
        assert len(solutions) == 2
        assert all(s.kind is SolutionKind.NON_KAHLER for s in solutions)
        small, large = sorted(float(s.x3_key) for s in solutions)
        # admissible roots solve x^2 - 19/8 x + 1
        assert small == pytest.approx(0.5470655, abs=1e-6)
        assert large == pytest.approx(1.8279345, abs=1e-6)
        assert small + large == pytest.approx(19 / 8, abs=1e-12)
        assert small * large == pytest.approx(1.0, abs=1e-12)

    def test_subcase_b_n6_p3(self):
        """Test two admissible non-Kahler roots for the next self-dual pair."""
        space = make_flag_space(6, 3)
        solutions = solve_case2b(space, expanded_Q(6, 3))
        assert len(solutions) == 2
        for solution in solutions:
            assert all(value.is_positive() for value in solution.enclosures()[1:])
        x3_values = [float(s.x3_key) for s in solutions]
        assert x3_values[0] * x3_values[1] == pytest.approx(1.0, abs=1e-12)

    def test_subcase_b_certified_widths(self, space31, q31):
        """Test positive enclosures with x3 refined to width 2^-80."""
        for solution in solve_case2b(space31, q31):
            for value in solution.enclosures()[1:]:
                assert value.is_positive()
                assert value.width < Fraction(1, 2 ** 60)
            assert solution.metric.x3.width <= Fraction(1, 2 ** 80)
            assert isinstance(solution.einstein_constant, RatInterval)
            assert solution.einstein_constant.is_positive()

    def test_subcase_b_rejects_non_squarefree(self, space31, q31):
        """Test that a quartic with a repeated factor is refused."""
        from src.utils.errors import CertificationError

        with pytest.raises(CertificationError):
            solve_case2b(space31, q31 * q31)


class TestEnumeration:
    """Tests for enumerate_einstein."""

    def test_n3_p1(self):
        """Test the 4 + 2 split and the x3 ordering for (3, 1)."""
        solutions = enumerate_einstein(3, 1)
        assert split_counts(solutions) == (4, 2)
        kahler = {s.metric.as_tuple() for s in solutions if s.kind is SolutionKind.KAHLER}
        assert kahler == KAHLER_31
        keys = [s.x3_key for s in solutions]
        assert keys == sorted(keys)

    def test_n4_p2(self):
        """Test six metrics, four of them Kahler, when n = 2p."""
        solutions = enumerate_einstein(4, 2)
        assert len(solutions) == 6
        assert split_counts(solutions) == (4, 2)
        assert {s.metric.as_tuple() for s in solutions if s.kind is SolutionKind.KAHLER} == KAHLER_42

    def test_partners(self):
        """Test that the two non-Kahler solutions are x1 <-> x3 relabels of each other."""
        solutions = enumerate_einstein(3, 1)
        indices = [i for i, s in enumerate(solutions) if s.kind is SolutionKind.NON_KAHLER]
        first, second = indices
        assert solutions[first].certificate.partner == second
        assert solutions[second].certificate.partner == first

        x3_small = solutions[first].x3_key
        x3_large = solutions[second].x3_key
        assert float(x3_small * x3_large) == pytest.approx(1.0, abs=1e-12)

    def test_relabel_partner_exact(self):
        """Test the relabel map on a Kahler tuple."""
        image = relabel_partner(Metric4(1, 2, 3, 4))
        assert image.as_tuple() == (1, Fraction(2, 3), Fraction(1, 3), Fraction(4, 3))

    def test_kahler_residuals_exact(self):
        """Test that the Kahler solutions satisfy the system exactly."""
        space = make_flag_space(5, 2)
        system = einstein_system(space)
        for solution in enumerate_einstein(5, 2):
            if solution.kind is SolutionKind.KAHLER:
                assert system.is_satisfied_by(solution.metric)
                assert isinstance(solution.einstein_constant, Fraction)

    def test_deterministic(self):
        """Test that repeated runs give identical solution lists."""
        first = [s.metric.as_tuple() for s in enumerate_einstein(3, 2)]
        second = [s.metric.as_tuple() for s in enumerate_einstein(3, 2)]
        assert first == second

    @pytest.mark.slow
    def test_main_count_grid(self):
        """Test the 4 + 2 split for all 189 pairs with n <= 20."""
        pairs = 0
        for n in range(3, 21):
            for p in range(1, n):
                assert split_counts(enumerate_einstein(n, p)) == (4, 2), (n, p)
                pairs += 1
        assert pairs == 189


class TestDuality:
    """Tests for duality_check."""

    @pytest.mark.parametrize("n,p", [(3, 1), (4, 1), (4, 2)])
    def test_duality(self, n, p):
        """Test that (n, n - p) is the x2 <-> x4 image of (n, p)."""
        assert duality_check(n, p)

    def test_mismatch_detected(self):
        """Test that a truncated dual set fails."""
        solutions = enumerate_einstein(3, 1)
        dual = enumerate_einstein(3, 2)
        assert not duality_check(3, 1, solutions, dual[:-1])
