"""
Tests for `dscones verify` and the top-level entry point.
"""
import json

import pytest

from dscones.main import _join_negative_values
from dscones.models.report_models import FailureRecord, SuiteSummary, VerifyReport


def _report(system: str, failed: int = 0) -> VerifyReport:
    failures = [FailureRecord(case_id=f"{system}/p/{k}", expected=0, got=1) for k in range(failed)]
    return VerifyReport(suite="section3", system=system, cases_run=3, cases_failed=failed, seed=7, failures=failures)


class TestVerify:
    """Test the verify command with the suites stubbed out."""

    def test_single_system_report(self, cli, mocker):
        """Test that one system prints one report object."""
        run = mocker.patch("dscones.commands.verify_command.run_suite", return_value=[_report("B2")])
        result = cli("verify", "--suite", "section3", "--types", "B2", "--seed", "7", "--cases", "3", "--workers", "2")

        assert result.code == 0
        assert result.json()["system"] == "B2"
        run.assert_called_once_with("section3", ["B2"], 7, 3, 2)

    def test_failures_exit_one(self, cli, mocker):
        """Test exit code 1 and a list of reports for several systems."""
        mocker.patch(
            "dscones.commands.verify_command.run_suite",
            return_value=[_report("A1"), _report("B2", failed=1)],
        )
        result = cli("verify", "--suite", "section3", "--types", "A1,B2")

        assert result.code == 1
        payload = result.json()
        assert [r["system"] for r in payload] == ["A1", "B2"]
        assert payload[1]["failures"][0]["case_id"] == "B2/p/0"

    def test_all_suites(self, cli, mocker):
        """Test that --suite all prints the summary."""
        summary = SuiteSummary(seed=7, cases_run=3, cases_failed=0, reports=[_report("A1")])
        run_all = mocker.patch("dscones.commands.verify_command.run_all", return_value=summary)
        result = cli("verify", "--suite", "all")

        assert result.code == 0
        assert result.json()["cases_run"] == 3
        run_all.assert_called_once_with(None, None, None, None)

    def test_out_file(self, cli, mocker, tmp_path):
        """Test that --out writes the report instead of printing it."""
        mocker.patch("dscones.commands.verify_command.run_suite", return_value=[_report("A1")])
        out = tmp_path / "report.json"
        result = cli("verify", "--suite", "section3", "--out", str(out))

        assert result.out == ""
        assert json.loads(out.read_text())["system"] == "A1"

    def test_unknown_suite_is_a_usage_error(self, cli):
        """Test exit code 2 for a suite that does not exist."""
        assert cli("verify", "--suite", "section4").code == 2


## INFO: THIS IS TO TEST THE TOP-LEVEL USAGE ERRORS.
@pytest.mark.parametrize("argv", [(), ("frobnicate",), ("table", "e", "--type", "A1"), ("verify",)])
def test_usage_errors(cli, argv):
    """Test that argparse failures map to exit code 2."""
    assert cli(*argv).code == 2


def test_help_exits_zero(cli):
    """Test that --help is not an error."""
    result = cli("--help")
    assert result.code == 0
    assert "table" in result.out


def test_join_negative_values():
    """Test that values starting with '-' are attached to their flag."""
    argv = ["eval", "m", "--x", "-1,2", "--lambda", "-1", "--type", "A1", "--nu", "-inf", "-v"]
    assert _join_negative_values(argv) == ["eval", "m", "--x=-1,2", "--lambda=-1", "--type", "A1", "--nu=-inf", "-v"]


def test_unexpected_errors_propagate(cli, mocker):
    """Test that a non-library exception is logged and re-raised."""
    mocker.patch("dscones.commands.table_command.build_report", side_effect=RuntimeError("bug"))
    with pytest.raises(RuntimeError):
        cli("table", "d", "--type", "A1")
