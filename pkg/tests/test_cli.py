"""Tests for the einflag command line."""

import csv
import io
import json
from pathlib import Path
from unittest.mock import patch

import pytest

from src.main import EXIT_INVALID, EXIT_OK, main, parse_args


class TestParseArgs:
    """Tests for argument parsing."""

    def test_solve_defaults(self):
        """Test defaults taken from the configuration."""
        args = parse_args(["solve", "--n", "3", "--p", "1"])
        assert args.command == "solve"
        assert args.format == "table"
        assert not args.with_lemmas

    def test_missing_command(self):
        """Test that a subcommand is required."""
        with pytest.raises(SystemExit):
            parse_args([])

    def test_unknown_format(self):
        """Test that formats outside table/json/csv are refused."""
        with pytest.raises(SystemExit):
            parse_args(["solve", "--n", "3", "--p", "1", "--format", "xml"])


class TestInvalidParameters:
    """Tests for exit code 2."""

    def test_p_out_of_range(self):
        assert main(["solve", "--n", "3", "--p", "3"]) == EXIT_INVALID

    def test_n_too_small(self):
        assert main(["solve", "--n", "2", "--p", "1"]) == EXIT_INVALID

    def test_sweep_range(self):
        assert main(["sweep", "--n-max", "2"]) == EXIT_INVALID

    def test_sweep_inverted_range(self):
        assert main(["sweep", "--n-min", "5", "--n-max", "4"]) == EXIT_INVALID

    def test_lemmas_needs_both(self):
        assert main(["lemmas", "--n", "5"]) == EXIT_INVALID


class TestSolve:
    """Tests for the solve command."""

    def test_json_n3_p1(self, capsys):
        """Test six solutions, two of them non-Kahler."""
        assert main(["solve", "--n", "3", "--p", "1", "--format", "json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["n"] == 3 and data["p"] == 1
        assert data["counts"] == {"total": 6, "kahler": 4, "non_kahler": 2}
        assert [s["idx"] for s in data["solutions"]] == list(range(6))

    def test_table_n4_p2(self, capsys):
        """Test the table for the self-dual pair."""
        assert main(["solve", "--n", "4", "--p", "2"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "6 Einstein metrics: 4 Kahler, 2 non-Kahler" in out
        assert out.count("non_kahler") == 2

    def test_with_lemmas(self, capsys):
        """Test lemma verdicts attached to a solve report."""
        assert main(["solve", "--n", "3", "--p", "1", "--with-lemmas", "--format", "json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["lemmas"]["passed"] is True
        assert data["lemmas"]["summary"]["L5"] == "pass"

    def test_out_file(self, tmp_path, capsys):
        """Test writing the report to a file."""
        target = tmp_path / "reports" / "n3p2.json"
        assert main(["solve", "--n", "3", "--p", "2", "--format", "json", "--out", str(target)]) == EXIT_OK
        assert capsys.readouterr().out == ""
        assert len(json.loads(target.read_text(encoding="utf-8"))["solutions"]) == 6


class TestSweep:
    """Tests for the sweep command."""

    def test_csv(self, tmp_path):
        """Test one CSV row per solution over n <= 4."""
        target = tmp_path / "sweep.csv"
        assert main(["sweep", "--n-max", "4", "--format", "csv", "--out", str(target)]) == EXIT_OK
        rows = list(csv.DictReader(io.StringIO(target.read_text(encoding="utf-8"))))
        assert len(rows) == 30
        assert {(r["n"], r["p"]) for r in rows} == {("3", "1"), ("3", "2"), ("4", "1"), ("4", "2"), ("4", "3")}

    def test_json_duality(self, capsys):
        """Test that every pair of a full range carries a passing duality check."""
        assert main(["sweep", "--n-max", "3", "--format", "json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert [(r["n"], r["p"]) for r in data] == [(3, 1), (3, 2)]
        assert all(r["duality_check"] is True for r in data)

    @pytest.mark.slow
    def test_jobs_identical_output(self, capsys):
        """Test that parallel runs produce byte-identical reports."""
        assert main(["sweep", "--n-max", "6", "--format", "json"]) == EXIT_OK
        serial = capsys.readouterr().out
        assert main(["sweep", "--n-max", "6", "--format", "json", "--jobs", "2"]) == EXIT_OK
        parallel = capsys.readouterr().out
        assert serial == parallel


class TestLemmas:
    """Tests for the lemmas command."""

    def test_single_pair(self, capsys):
        """Test the derivative lemma on an upper-half pair."""
        assert main(["lemmas", "--n", "10", "--p", "7", "--format", "json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["lemmas"]["summary"]["L2"] == "pass"
        assert "solutions" not in data

    def test_range_table(self, capsys):
        """Test a small range rendered as a table."""
        assert main(["lemmas", "--n-max", "4"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.count("Sp(") == 5
        assert "L9" in out


class TestLogging:
    """Tests for log file wiring."""

    def test_log_file_flag(self, tmp_path, mock_config, capsys):
        """Test that --log-file writes a log under the configured directory."""
        from src.utils.logger import setup_logging

        mock_config.log_dir = tmp_path
        try:
            with patch("src.main.get_config", return_value=mock_config):
                assert main(["--log-file", "solve", "--n", "3", "--p", "1"]) == EXIT_OK
            assert list(tmp_path.glob("einflag_*.log"))
        finally:
            setup_logging("WARNING")

    def test_log_file_default_off(self):
        """Test that file logging stays off unless asked for."""
        assert not parse_args(["solve", "--n", "3", "--p", "1"]).log_file

    def test_relative_log_dir(self, tmp_path):
        """Test that a relative log dir resolves against the project root."""
        from src.utils.config import Config

        (tmp_path / "default.yaml").write_text('logging:\n  dir: "data/logs"\n', encoding="utf-8")
        config = Config(config_dir=tmp_path)
        root = Path(__file__).resolve().parents[1]
        assert config.log_dir == root / "data" / "logs"
        (tmp_path / "default.yaml").write_text(f'logging:\n  dir: "{tmp_path}"\n', encoding="utf-8")
        assert Config(config_dir=tmp_path).log_dir == tmp_path
