"""Tests for report records and their renderings."""

import csv
import io
import json
from fractions import Fraction

import pytest

from src.realroots import RatInterval
from src.report import (
    CSV_COLUMNS,
    ReportFormat,
    SweepReport,
    attach_duality,
    parameter_pairs,
    solve_pair,
    value_fields,
)


@pytest.fixture(scope="module")
def record31():
    return solve_pair(3, 1)


@pytest.fixture(scope="module")
def record32():
    return solve_pair(3, 2)


class TestParameterPairs:
    """Tests for the sweep grid."""

    def test_counts(self):
        """Test (N - 2)(N + 1)/2 pairs for 3 <= n <= N."""
        assert len(parameter_pairs(3, 10)) == 44
        assert len(parameter_pairs(3, 15)) == 104
        assert len(parameter_pairs(3, 20)) == 189

    def test_order(self):
        """Test n-major ordering."""
        assert parameter_pairs(3, 4) == [(3, 1), (3, 2), (4, 1), (4, 2), (4, 3)]


class TestValueFields:
    """Tests for exact-plus-decimal value rendering."""

    def test_rational(self):
        """Test a rational value."""
        fields = value_fields(Fraction(10, 3), 5)
        assert fields == {"rational": "10/3", "decimal": "3.3333"}

    def test_interval(self):
        """Test an enclosure."""
        fields = value_fields(RatInterval(Fraction(1, 3), Fraction(1, 2)), 4)
        assert fields["interval"] == ["1/3", "1/2"]
        assert fields["decimal"] == "0.4167"

    def test_point_interval(self):
        """Test that a degenerate interval renders as a rational."""
        fields = value_fields(RatInterval.point(Fraction(2)), 3)
        assert fields["rational"] == "2"


class TestSweepRecord:
    """Tests for SweepRecord."""

    def test_counts(self, record31):
        """Test counts and split for (3, 1)."""
        assert record31.counts == {"total": 6, "kahler": 4, "non_kahler": 2}
        assert record31.split_ok
        assert record31.passed
        assert record31.dimensions == (4, 6, 4, 2)

    def test_attach_duality(self, record31, record32):
        """Test duality filled from already computed records."""
        records = [record31, record32]
        attach_duality(records)
        assert record31.duality is True
        assert record32.duality is True


class TestSweepReport:
    """Tests for the three output formats."""

    def test_json_single(self, record31):
        """Test the single-record JSON layout."""
        data = json.loads(SweepReport([record31], digits=20).to_json(single=True))
        assert len(data["solutions"]) == 6
        assert sum(1 for s in data["solutions"] if s["kind"] == "non_kahler") == 2
        assert "seconds" not in data
        non_kahler = next(s for s in data["solutions"] if s["kind"] == "non_kahler")
        assert "interval" in non_kahler["metric"]["x3"]
        assert non_kahler["metric"]["x1"] == {"rational": "1", "decimal": "1"}

    def test_json_timings(self, record31):
        """Test that wall-time is reported only on request."""
        data = json.loads(SweepReport([record31], timings=True).to_json(single=True))
        assert "seconds" in data

    def test_json_deterministic(self, record31):
        """Test identical output on repeated rendering."""
        report = SweepReport([record31])
        assert report.to_json() == report.to_json()

    def test_csv(self, record31, record32):
        """Test the CSV schema and one row per solution."""
        text = SweepReport([record31, record32]).to_csv()
        rows = list(csv.DictReader(io.StringIO(text)))
        assert text.splitlines()[0] == ",".join(CSV_COLUMNS)
        assert len(rows) == 12
        assert {r["kind"] for r in rows} == {"kahler", "non_kahler"}
        assert all(r["x1"] == "1" for r in rows)

    def test_table(self, record31):
        """Test the human-readable table."""
        text = SweepReport([record31], digits=10).render(ReportFormat.TABLE)
        assert "Sp(3)/(U(1) x U(2))" in text
        assert "6 Einstein metrics: 4 Kahler, 2 non-Kahler" in text
        assert "case2b" in text

    def test_first_failure(self, record31):
        """Test failure reporting on a bad split."""
        from dataclasses import replace

        broken = replace(record31, solutions=record31.solutions[:5])
        report = SweepReport([record31, broken])
        assert not report.passed
        assert report.first_failure is broken
