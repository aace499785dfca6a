"""Tests for the lemma checker."""

from fractions import Fraction

import pytest

from src.exactmath import UniPoly, scalar_resultant
from src.flagmodel import make_flag_space
from src.solver import verify_lemmas
from src.solver.case1 import expanded_f
from src.solver.lemmas import (
    derive_S,
    derive_T,
    expanded_S,
    h_in_p,
    h_value,
    closed_form_betas,
    subcase1_quadratics,
)

ALL_LEMMAS = [f"L{k}" for k in range(1, 10)]


class TestClosedForms:
    """Tests for the closed forms."""

    def test_h_value(self):
        """Test h_{3,2} and h_{3,2} = h(n - 1)."""
        assert h_value(3, 2) == -582
        assert h_value(3, 2) == -2 * (81 + 108 + 90 + 18 - 6)

    def test_h_in_p_agrees(self):
        """Test the quartic-in-p form against the two-variable form."""
        for n in range(3, 20):
            h = h_in_p(n)
            for p in range(1, n):
                assert h(p) == h_value(n, p)

    def test_h_at_half(self):
        """Test h(n/2) for n = 4."""
        assert h_in_p(4)(2) == -2092

    def test_betas_n3_p1(self):
        """Test the two intersection ordinates for (3, 1)."""
        beta1, beta2 = closed_form_betas(3, 1)
        assert beta1 == Fraction(80, 9)
        assert beta2 == Fraction(172512, 4077)

    def test_subcase1_resultant_n3_p1(self):
        """Test the reduced sub-case 1 resultant for (3, 1)."""
        first, second = subcase1_quadratics(3, 1)
        assert first == UniPoly([20, -9], "x4") * UniPoly([-55, -24], "x4")
        assert second == UniPoly([260, -717, 216], "x4")
        assert scalar_resultant(first, second) == -37791360000

    def test_subcase1_resultant_vanishes_when_self_dual(self):
        """Test the (n - 2p) factor of the reduced resultant."""
        first, second = subcase1_quadratics(6, 3)
        assert scalar_resultant(first, second) == 0


class TestResultantQuartics:
    """Tests for S and T."""

    def test_S_n3_p1(self, q31, s31):
        """Test S from the resultant definition."""
        assert derive_S(3, 1, q31) == s31
        assert expanded_S(3, 1) == s31

    def test_S_signs_n3_p1(self, s31):
        """Test S(0), S(4/3), S(-2/3) and S(-1/3) for (3, 1)."""
        assert s31(0) == 160
        assert s31(Fraction(4, 3)) == -512
        assert s31(Fraction(-2, 3)) == 648
        assert s31(Fraction(-1, 3)) == Fraction(-2118, 9)

    def test_T_is_dual_S(self, space31, q31):
        """Test T_{3,1} = S_{3,2}."""
        assert derive_T(space31, q31) == expanded_S(3, 2)

    def test_S_self_dual_double_root(self):
        """Test that S has a double root at 0 when n = 2p."""
        S = expanded_S(6, 3)
        assert S.coefficient(0) == 0
        assert S.coefficient(1) == 0


class TestVerifyLemmas:
    """Tests for verify_lemmas."""

    def test_n3_p1(self):
        """Test all applicable lemmas for (3, 1)."""
        report = verify_lemmas(3, 1)
        assert report.passed
        assert [v.identifier for v in report.verdicts] == ALL_LEMMAS
        summary = report.summary()
        assert summary["L2"] == summary["L3"] == summary["L4"] == "n/a"
        assert summary["L5"] == "pass"
        assert summary["L7"] == "pass"

    def test_q_at_half_witness(self):
        """Test the Q(1/2) witness for (3, 1)."""
        verdict = verify_lemmas(3, 1).verdict("L5")
        assert verdict.witnesses["Q_at_half"] == "-3/16"

    def test_upper_half_applicable(self):
        """Test that the derivative and convexity lemmas run for (10, 7)."""
        report = verify_lemmas(10, 7)
        assert report.verdict("L2").status == "pass"
        assert report.verdict("L3").status == "pass"
        assert report.verdict("L4").status == "pass"
        assert report.passed

    def test_self_dual(self):
        """Test (4, 2): root patterns are not applicable, everything else passes."""
        report = verify_lemmas(4, 2)
        assert report.verdict("L7").status == "n/a"
        assert report.verdict("L9").status == "pass"
        assert report.passed

    def test_duality_identities(self):
        """Test L8 witnesses for (3, 1)."""
        verdict = verify_lemmas(3, 1).verdict("L8")
        assert verdict.witnesses == {"g_equals_dual_f": "True", "T_equals_dual_S": "True"}

    def test_f_at_zero(self):
        """Test L1 against the expanded f."""
        verdict = verify_lemmas(5, 2).verdict("L1")
        assert verdict.witnesses["value"] == str(expanded_f(5, 2)(0))

    def test_invalid(self):
        """Test that out-of-range parameters are rejected."""
        from src.utils.errors import InvalidParameters

        with pytest.raises(InvalidParameters):
            verify_lemmas(3, 3)

    @pytest.mark.slow
    def test_grid(self):
        """Test every pair with n <= 15."""
        failures = []
        for n in range(3, 16):
            for p in range(1, n):
                report = verify_lemmas(n, p)
                if not report.passed:
                    failures.append((n, p, [v.identifier for v in report.failures]))
        assert failures == []
