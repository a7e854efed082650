"""
Unit tests for the pydantic report models.
"""
import pytest
from pydantic import ValidationError

from dscones.models.report_models import (
    EvalValue,
    FailureRecord,
    GoldenTable,
    SuiteSummary,
    VerifyReport,
    WeightTermModel,
)
from dscones.utils.errors import (
    DsConesError,
    MathPreconditionError,
    NotRegularError,
    PreconditionError,
    UnsupportedSystemError,
)


def _report(failed: int = 0, run: int = 2) -> VerifyReport:
    failures = [FailureRecord(case_id=f"A1/p/{k}", expected=0, got=1) for k in range(failed)]
    return VerifyReport(suite="section3", system="A1", cases_run=run, cases_failed=failed, seed=7, failures=failures)


class TestVerifyReport:
    """Test the report consistency validators."""

    def test_valid_report(self):
        """Test a report with one failure."""
        report = _report(failed=1)
        assert report.failures[0].case_id == "A1/p/0"

    def test_failure_count_must_match(self):
        """Test that cases_failed must equal the number of failure records."""
        with pytest.raises(ValidationError):
            VerifyReport(suite="s", system="A1", cases_run=3, cases_failed=2, seed=7, failures=[])

    def test_failures_cannot_exceed_runs(self):
        """Test cases_failed <= cases_run."""
        with pytest.raises(ValidationError):
            _report(failed=3, run=2)

    def test_seed_range(self):
        """Test that a negative seed is rejected."""
        with pytest.raises(ValidationError):
            VerifyReport(suite="s", system="A1", cases_run=0, cases_failed=0, seed=-1)


## INFO: THIS IS TO TEST THAT SUMMARY TOTALS ARE CHECKED AGAINST THE REPORTS.
def test_suite_summary_totals():
    """Test SuiteSummary total validation."""
    reports = [_report(), _report(failed=1)]
    summary = SuiteSummary(seed=7, cases_run=4, cases_failed=1, reports=reports)
    assert summary.cases_failed == 1

    with pytest.raises(ValidationError):
        SuiteSummary(seed=7, cases_run=5, cases_failed=1, reports=reports)


def test_golden_table_needs_identity():
    """Test that a golden table without 'e' is rejected."""
    with pytest.raises(ValidationError):
        GoldenTable(system="A1", q=1, table={"s1": 2})


def test_weight_term_sign():
    """Test that a Kostant sign is +1 or -1."""
    assert WeightTermModel(sign=-1, weight=[1, "1/2"], kostant_length=1, word="s1").sign == -1
    with pytest.raises(ValidationError):
        WeightTermModel(sign=0, weight=[0], kostant_length=0, word="e")


def test_eval_value_shapes():
    """Test integer and word-list values."""
    assert EvalValue(value=2).model_dump() == {"value": 2}
    assert EvalValue(value=["e", "s1"]).value == ["e", "s1"]


## INFO: THIS IS TO TEST THE EXIT CODES CARRIED BY THE ERROR HIERARCHY.
@pytest.mark.parametrize("error, code", [
    (DsConesError, 4),
    (PreconditionError, 4),
    (NotRegularError, 4),
    (UnsupportedSystemError, 2),
    (MathPreconditionError, 3),
])
def test_error_exit_codes(error, code):
    """Test exit_code and message on each error class."""
    exc = error("boom")
    assert exc.exit_code == code
    assert exc.message == "boom"
    assert isinstance(exc, DsConesError)
