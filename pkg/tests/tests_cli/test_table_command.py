"""
Tests for `dscones table d`.
"""
import json


## INFO: THIS IS TO TEST THE JSON d-TABLE OF A1.
def test_table_json(cli):
    """Test d and d^vee of A1 with the base chamber e."""
    result = cli("table", "d", "--type", "A1")
    payload = result.json()

    assert result.code == 0
    assert payload["system"] == "A1"
    assert payload["base_chamber"] == "e"
    assert payload["q"] == 1
    assert payload["d"] == {"e": 0, "s1": 2}
    assert payload["d_vee"] == {"e": 0, "s1": 2}


def test_table_csv(cli):
    """Test the CSV rows, ordered by length."""
    result = cli("table", "d", "--type", "A1xA1", "--format", "csv")
    lines = result.out.splitlines()

    assert lines[0] == "word,length,d,d_vee"
    assert lines[1] == "e,0,0,0"
    assert lines[-1] == "s1*s2,2,4,4"
    assert len(lines) == 5


def test_table_other_base_chamber(cli):
    """Test that the base chamber s1 moves the d-values of A1."""
    payload = cli("table", "d", "--type", "A1", "--base-chamber", "s1").json()
    assert payload["base_chamber"] == "s1"
    assert sorted(payload["d"].values()) == [0, 2]


def test_table_needs_minus_one(cli):
    """Test that A2 exits with the mathematical precondition code."""
    result = cli("table", "d", "--type", "A2")
    assert result.code == 3
    assert result.out == ""


class TestWriteGolden:
    """Test --write-golden."""

    def test_write_golden(self, cli, golden_dir):
        """Test that the A1 table is written under settings.golden_dir."""
        assert cli("table", "d", "--type", "A1", "--write-golden").code == 0
        stored = json.loads((golden_dir / "A1.json").read_text())
        assert stored == {"system": "A1", "base_chamber": "e", "q": 1, "table": {"e": 0, "s1": 2}}

    def test_write_golden_needs_base_chamber_e(self, cli, golden_dir):
        """Test that another base chamber is refused."""
        result = cli("table", "d", "--type", "A1", "--base-chamber", "s1", "--write-golden")
        assert result.code == 4
        assert not (golden_dir / "A1.json").exists()
