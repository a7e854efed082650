"""
Tests for golden d-table files.
"""
import pytest

from dscones.core.rootsys import root_system
from dscones.models.report_models import GoldenTable
from dscones.utils.errors import DsConesError
from dscones.verify.golden import diff_golden, golden_from_system, golden_path, load_golden, write_golden


def test_missing_golden_is_none(golden_dir):
    """Test that an absent file loads as None."""
    assert load_golden("B2") is None


def test_write_then_load(golden_dir):
    """Test that a written A1 table is read back from settings.golden_dir."""
    path = write_golden(golden_from_system(root_system("A1")))

    assert path == golden_dir / "A1.json"
    loaded = load_golden("A1")
    assert loaded.table == {"e": 0, "s1": 2}
    assert loaded.q == 1


def test_malformed_golden(golden_dir):
    """Test that a file without the identity word is rejected."""
    golden_path("A1").write_text('{"system": "A1", "q": 1, "table": {"s1": 2}}')
    with pytest.raises(DsConesError):
        load_golden("A1")

    golden_path("A1").write_text("not json")
    with pytest.raises(DsConesError):
        load_golden("A1")


## INFO: THIS IS TO TEST THAT ONLY DISAGREEING WORDS ARE REPORTED.
def test_diff_golden():
    """Test diff_golden on a changed, a missing and an extra word."""
    golden = GoldenTable(system="A1xA1", q=2, table={"e": 0, "s1": 0, "s2": 0, "s1*s2": 4})
    computed = {"e": 0, "s1": 1, "s2": 0, "s2*s1": 4}
    assert diff_golden(golden, computed) == {
        "s1": (0, 1),
        "s1*s2": (4, None),
        "s2*s1": (None, 4),
    }
