"""
Tests for root systems, chambers and Weyl groups built from Cartan data.
"""
from fractions import Fraction

import pytest

from dscones.config import settings
from dscones.core.ratgeom import dot
from dscones.core.rootsys import empty_system, root_system, system_from_cartan
from dscones.utils.errors import (
    MathPreconditionError,
    NotRegularError,
    PreconditionError,
    UnsupportedSystemError,
)


## INFO: THIS IS TO TEST THE SIZES OF THE STANDARD SYSTEMS.
@pytest.mark.parametrize("label, order, positive, minus_one", [
    ("A1", 2, 1, True),
    ("A2", 6, 3, False),
    ("B2", 8, 4, True),
    ("C2", 8, 4, True),
    ("G2", 12, 6, True),
    ("A1xA1", 4, 2, True),
    ("A3", 24, 6, False),
    ("B3", 48, 9, True),
])
def test_system_sizes(label, order, positive, minus_one):
    """Test |W|, |R+|, the chamber count and whether -1 is in W."""
    system = root_system(label)
    assert system.label == label
    assert len(system.weyl_group()) == order
    assert len(system.chambers()) == order
    assert system.n_positive == positive
    assert system.minus_one_in_W() is minus_one


@pytest.mark.parametrize("label, q", [("A1", 1), ("A1xA1", 2), ("B2", 3), ("G2", 4), ("B3", 6)])
def test_q_invariant(label, q):
    """Test q(R) = (|R+| + dim X) / 2."""
    assert root_system(label).q_invariant() == q


def test_q_invariant_needs_minus_one(a2):
    """Test that q(R) is refused when -1 is not in W."""
    with pytest.raises(MathPreconditionError):
        a2.q_invariant()


class TestParsing:
    """Test Cartan type strings and matrices."""

    @pytest.mark.parametrize("spec", ["Z2", "G3", "F3", "D2", "", "A"])
    def test_unsupported_types(self, spec):
        """Test that unknown or malformed types raise UnsupportedSystemError."""
        with pytest.raises(UnsupportedSystemError):
            root_system(spec)

    def test_json_cartan_matrix(self):
        """Test a JSON Cartan matrix of type A2."""
        system = root_system("[[2, -1], [-1, 2]]")
        assert system.label == "custom"
        assert len(system.weyl_group()) == 6

    @pytest.mark.parametrize("spec", ["[[2, 1], [1, 2]]", "[[2, -2], [-2, 2]]", "[[2, -1]]", "[1, 2"])
    def test_invalid_cartan_matrices(self, spec):
        """Test sign, finite-type, shape and JSON checks."""
        with pytest.raises(UnsupportedSystemError):
            root_system(spec)

    def test_rank_limit(self, mocker):
        """Test that systems above RANK_LIMIT are refused."""
        mocker.patch.object(settings, "rank_limit", 2)
        a3 = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
        with pytest.raises(UnsupportedSystemError) as exc_info:
            system_from_cartan(a3, "A3")
        assert "RANK_LIMIT" in str(exc_info.value)


class TestWeylGroup:
    """Test Weyl elements and chambers of B2."""

    def test_longest_element(self, b2):
        """Test that w0 = -1 has length |R+|."""
        w0 = max(b2.weyl_group(), key=lambda w: w.length)
        assert w0.length == b2.n_positive
        assert w0.act((Fraction(1), Fraction(2))) == (Fraction(-1), Fraction(-2))

    def test_epsilon_is_parity_of_length(self, b2):
        """Test eps(w) = (-1)^l(w) for every w."""
        assert all(w.epsilon == (-1) ** w.length for w in b2.weyl_group())

    def test_words(self, b2):
        """Test that s1 s1 = e and that a bad word is rejected."""
        assert b2.element_from_word((0, 0)) == b2.identity_element
        assert b2.element_from_word((0, 1)).inverse == b2.element_from_word((1, 0))
        with pytest.raises(PreconditionError):
            b2.element_from_word((2,))

    def test_chamber_of(self, b2):
        """Test the base chamber point and a non-regular point."""
        p = b2.chamber_point(b2.base_chamber)
        assert b2.chamber_of(p) == b2.base_chamber
        with pytest.raises(NotRegularError):
            b2.chamber_of((Fraction(0), Fraction(0)))

    def test_length_matches_word(self, b2):
        """Test l(C+, wC+) = l(w)."""
        base = b2.base_chamber
        for w in b2.weyl_group():
            assert b2.length(base, w.act_on_chamber(base)) == w.length


## INFO: THIS IS TO TEST THAT RHO PAIRS TO 1 WITH EVERY SIMPLE COROOT.
@pytest.mark.parametrize("label", ["A2", "B2", "G2", "B3"])
def test_rho_pairing(label):
    """Test <rho, alpha_i^vee> = 1."""
    system = root_system(label)
    rho = system.rho(system.base_chamber)
    assert all(dot(rho, c) == 1 for c in system.simple_coroots(system.base_chamber))


def test_dual_system(b2):
    """Test that the coroot system of B2 has the same Weyl group and root count."""
    dual = b2.dual()
    assert len(dual.weyl_group()) == 8
    assert dual.n_positive == 4


def test_empty_system():
    """Test the system with no roots."""
    system = empty_system(0)
    assert len(system.weyl_group()) == 1
    assert system.minus_one_in_W()
