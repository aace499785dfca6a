"""Tests for the flag manifold model."""

import random
from fractions import Fraction
from unittest.mock import patch

import pytest

from src.flagmodel import (
    FlagSpace,
    Metric4,
    TripleTable,
    einstein_constant,
    einstein_system,
    kahler_einstein_metrics,
    make_flag_space,
    ricci_components,
    ricci_generic,
)
from src.realroots import RatInterval
from src.utils.errors import FactorizationMismatch, InvalidParameters, NotEinstein


def _random_metric(rng: random.Random) -> Metric4:
    return Metric4(*(Fraction(rng.randint(1, 40), rng.randint(1, 9)) for _ in range(4)))


class TestFlagSpace:
    """Tests for make_flag_space."""

    def test_n3_p1(self, space31):
        """Test dimensions and constants for (3, 1)."""
        assert space31.dimensions == (4, 6, 4, 2)
        assert space31.c123 == Fraction(3, 4)
        assert space31.c134 == Fraction(1, 2)

    def test_n4_p2(self, space42):
        """Test dimensions and constants for (4, 2)."""
        assert space42.dimensions == (8, 6, 8, 6)
        assert space42.c123 == space42.c134 == Fraction(6, 5)
        assert space42.is_self_dual

    def test_self_dual(self):
        """Test that only n = 2p is its own dual."""
        for n in range(3, 12):
            for p in range(1, n):
                space = make_flag_space(n, p)
                assert space.is_self_dual == (space.dual() == space)

    @pytest.mark.parametrize("n,p", [(3, 3), (3, 0), (2, 1), (5, -1)])
    def test_invalid(self, n, p):
        """Test out-of-range parameters."""
        with pytest.raises(InvalidParameters):
            make_flag_space(n, p)

    def test_non_integer(self):
        """Test that non-integers are rejected."""
        make_flag_space(3, 1)
        with pytest.raises(InvalidParameters):
            make_flag_space(3.0, 1)
        with pytest.raises(InvalidParameters):
            make_flag_space(True, 1)


class TestRicci:
    """Tests for Ricci components."""

    def test_normal_metric(self, space31):
        """Test the components at (1, 1, 1, 1)."""
        r = ricci_components(space31, Metric4(1, 1, 1, 1))
        assert r.as_tuple() == (Fraction(11, 32), Fraction(7, 16), Fraction(11, 32), Fraction(3, 8))

    def test_kahler_einstein(self, space31):
        """Test that g1 = (n/2, n+p+1, n/2+p+1, p+1) is Einstein."""
        r = ricci_components(space31, Metric4(Fraction(3, 2), 5, Fraction(7, 2), 2))
        assert len(set(r.as_tuple())) == 1

    def test_homogeneity(self):
        """Test r(c g) = r(g) / c."""
        rng = random.Random(1)
        for n, p in [(3, 1), (5, 2), (6, 3)]:
            space = make_flag_space(n, p)
            g = _random_metric(rng)
            c = Fraction(rng.randint(1, 7), rng.randint(1, 7))
            scaled = ricci_components(space, g.scaled(c)).as_tuple()
            assert scaled == tuple(r / c for r in ricci_components(space, g).as_tuple())

    def test_duality(self):
        """Test r2 of (n, p) equals r4 of (n, n-p) after swapping x2 and x4."""
        rng = random.Random(2)
        for n, p in [(3, 1), (5, 2), (7, 3), (8, 1)]:
            space, dual = make_flag_space(n, p), make_flag_space(n, n - p)
            for _ in range(10):
                g = _random_metric(rng)
                r = ricci_components(space, g)
                s = ricci_components(dual, g.swap_24())
                assert r.r2 == s.r4
                assert r.r4 == s.r2
                assert r.r1 == s.r1
                assert r.r3 == s.r3

    def test_generic_matches_closed_form(self):
        """Test the general formula against the four-summand formulas."""
        rng = random.Random(3)
        for n, p in [(3, 1), (5, 2), (7, 3)]:
            space = make_flag_space(n, p)
            table = space.triple_table()
            for _ in range(100):
                g = _random_metric(rng)
                assert tuple(ricci_generic(table, g.as_tuple())) == ricci_components(space, g).as_tuple()

    def test_generic_trivial_table(self):
        """Test that with no triples every component is 1/(2 x_k)."""
        table = TripleTable((3, 5, 7))
        assert ricci_generic(table, [1, 1, 1]) == [Fraction(1, 2)] * 3

    def test_generic_two_summands(self):
        """Test a hand expansion with d = (2, 1) and [112] = 1/2."""
        table = TripleTable((2, 1), {(1, 1, 2): Fraction(1, 2)})
        assert ricci_generic(table, [Fraction(1), Fraction(1)]) == [Fraction(3, 8), Fraction(3, 8)]

    def test_triple_table_symmetric(self):
        """Test permutation invariance of [ijk]."""
        table = TripleTable((1, 1, 1), {(3, 1, 2): 2})
        assert table.get(1, 2, 3) == table.get(2, 3, 1) == 2
        with pytest.raises(InvalidParameters):
            TripleTable((1, 1), {(1, 2, 3): 1})

    def test_interval_metric(self, space31):
        """Test evaluation on interval entries."""
        g = Metric4(RatInterval(1, 1), RatInterval(Fraction(9, 10), Fraction(11, 10)), 1, 1)
        r = ricci_components(space31, g)
        assert r.r1.contains(Fraction(11, 32))

    def test_non_positive_metric_rejected(self):
        """Test the positivity invariant."""
        with pytest.raises(InvalidParameters):
            Metric4(1, 0, 1, 1)


class TestEinsteinSystem:
    """Tests for the derived polynomial system."""

    def test_structure_constant_cross_check(self, space31):
        """Test that a wrong structure-constant table is caught before clearing."""
        broken = TripleTable(space31.dimensions, {(1, 2, 3): space31.c123})
        with patch.object(FlagSpace, "triple_table", return_value=broken):
            with pytest.raises(FactorizationMismatch):
                einstein_system.__wrapped__(space31)

    def test_first_equation_has_factor(self, space31):
        """Test that r1 - r3 carries the factor x1 - x3."""
        system = einstein_system(space31)
        first = system.homogeneous[0]
        x3_first = first.specialize({"x1": 1})
        quotient = x3_first.exact_divide_linear("x3", 1)
        assert not quotient.is_zero

    def test_kahler_tuple_is_zero(self, space31):
        """Test an exact zero at (1, 10/3, 7/3, 4/3)."""
        system = einstein_system(space31)
        g = Metric4(1, Fraction(10, 3), Fraction(7, 3), Fraction(4, 3))
        assert system.residuals(g) == (0, 0, 0)
        point = {"x2": Fraction(10, 3), "x3": Fraction(7, 3), "x4": Fraction(4, 3)}
        assert all(eq.evaluate(point) == 0 for eq in system.equations)

    def test_normal_metric_not_zero(self, space31):
        """Test that (1, 1, 1, 1) is not a solution."""
        residuals = einstein_system(space31).residuals(Metric4(1, 1, 1, 1))
        assert residuals[1] != 0 and residuals[2] != 0

    def test_homogeneous_and_normalized(self):
        """Test grading before normalization and generators after it."""
        for n, p in [(3, 1), (4, 2), (9, 5)]:
            system = einstein_system(make_flag_space(n, p))
            assert all(eq.is_homogeneous() for eq in system.homogeneous)
            assert all(eq.total_degrees() == {3} for eq in system.homogeneous)
            assert all(eq.gens == ("x2", "x3", "x4") for eq in system.equations)
            assert all(s != 0 for s in system.scalars)


class TestKahlerEinstein:
    """Tests for the Kahler-Einstein tuples."""

    def test_n3_p1(self, space31):
        """Test the four normalized tuples for (3, 1)."""
        tuples = {g.as_tuple() for g in kahler_einstein_metrics(space31)}
        expected = {
            (1, Fraction(10, 3), Fraction(7, 3), Fraction(4, 3)),
            (1, 2, 3, 4),
            (1, Fraction(10, 7), Fraction(3, 7), Fraction(4, 7)),
            (1, Fraction(2, 3), Fraction(1, 3), Fraction(4, 3)),
        }
        assert tuples == expected

    def test_self_dual(self, space42):
        """Test that (1, 3/2, 5/2, 7/2) appears for n = 2p = 4."""
        tuples = [g.as_tuple() for g in kahler_einstein_metrics(space42)]
        assert (1, Fraction(3, 2), Fraction(5, 2), Fraction(7, 2)) in tuples
        assert len(set(tuples)) == 4

    def test_all_exact_zero(self):
        """Test exact residuals on a sample of parameters."""
        for n in (3, 4, 7, 12):
            for p in range(1, n):
                space = make_flag_space(n, p)
                system = einstein_system(space)
                assert all(system.is_satisfied_by(g) for g in kahler_einstein_metrics(space))

    @pytest.mark.slow
    def test_all_exact_zero_full_range(self):
        """Test exact residuals for 3 <= n <= 50."""
        for n in range(3, 51):
            for p in range(1, n):
                space = make_flag_space(n, p)
                assert all(einstein_system(space).is_satisfied_by(g) for g in kahler_einstein_metrics(space))


class TestEinsteinConstant:
    """Tests for einstein_constant."""

    def test_exact(self, space31):
        """Test a positive rational constant."""
        g = Metric4(1, Fraction(10, 3), Fraction(7, 3), Fraction(4, 3))
        e = einstein_constant(space31, g)
        assert e > 0
        assert e == ricci_components(space31, g).r1

    def test_not_einstein(self, space31):
        """Test the error for a non-Einstein metric."""
        with pytest.raises(NotEinstein):
            einstein_constant(space31, Metric4(1, 1, 1, 1))

    def test_scale_law(self, space31):
        """Test e(c g) = e(g) / c."""
        g = Metric4(1, 2, 3, 4)
        assert einstein_constant(space31, g.scaled(2)) == einstein_constant(space31, g) / 2
