"""
Unit tests for parsing and formatting helpers.
"""
from fractions import Fraction

import pytest

from dscones.utils.errors import PreconditionError
from dscones.utils.helpers import (
    format_rational,
    format_vector,
    format_word,
    parse_index_set,
    parse_rational,
    parse_vector,
    parse_vectors,
    parse_word,
)


class TestParsing:
    """Test the flag parsers."""

    def test_parse_rational_forms(self):
        """Test integers, fractions and decimals."""
        assert parse_rational("3") == Fraction(3)
        assert parse_rational(" -1/2 ") == Fraction(-1, 2)
        assert parse_rational("0.25") == Fraction(1, 4)

    @pytest.mark.parametrize("text", ["x", "1/0", "1//2"])
    def test_parse_rational_invalid(self, text):
        """Test that bad literals raise PreconditionError."""
        with pytest.raises(PreconditionError):
            parse_rational(text)

    def test_parse_vector(self):
        """Test a comma-separated vector and the empty vector."""
        assert parse_vector("1/2,-3") == (Fraction(1, 2), Fraction(-3))
        assert parse_vector("") == ()

    def test_parse_vectors(self):
        """Test ';'-separated generator lists."""
        assert parse_vectors("1,0;0,1") == [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
        assert parse_vectors("  ") == []

    def test_parse_index_set_is_one_based(self):
        """Test that indices are deduplicated, sorted and shifted to 0-based."""
        assert parse_index_set("3,1,3") == (0, 2)
        assert parse_index_set("") == ()

    @pytest.mark.parametrize("text", ["0", "a,b"])
    def test_parse_index_set_invalid(self, text):
        """Test that 0 and non-integers are rejected."""
        with pytest.raises(PreconditionError):
            parse_index_set(text)


class TestWords:
    """Test the Weyl word key format."""

    def test_format_word(self):
        """Test the identity and a long word."""
        assert format_word(()) == "e"
        assert format_word((0, 1, 0)) == "s1*s2*s1"

    def test_parse_word_forms(self):
        """Test 's1*s2', '1,2' and 'e'."""
        assert parse_word("s1*s2") == (0, 1)
        assert parse_word("1,2") == (0, 1)
        assert parse_word("e") == ()

    def test_parse_word_invalid(self):
        """Test that garbage raises PreconditionError."""
        with pytest.raises(PreconditionError):
            parse_word("s1*t2")


## INFO: THIS IS TO TEST THAT OUTPUT NUMBERS ARE INTS OR "p/q" STRINGS.
def test_format_rational_and_vector():
    """Test integer collapse and fraction strings."""
    assert format_rational(Fraction(4, 2)) == 2
    assert format_rational(Fraction(-1, 3)) == "-1/3"
    assert format_vector((Fraction(1), Fraction(1, 2))) == [1, "1/2"]
