"""
Tests for the exact rational linear algebra kernel.
"""
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from dscones.core.ratgeom import (
    SignCharacter,
    check_gram,
    determinant,
    identity,
    inverse,
    is_positive_definite,
    kernel_basis,
    mat,
    mat_mul,
    mat_vec,
    primitive,
    project,
    rank,
    rref,
    sign_character_lifts,
    solve_linear,
    vec,
)
from dscones.utils.errors import DimensionMismatchError, NotPositiveDefiniteError, PreconditionError


class TestElimination:
    """Test rref, rank, determinant and inverse."""

    def test_rref_full_rank(self):
        """Test that an invertible matrix reduces to the identity."""
        rows, pivots = rref(mat([[2, 4], [1, 3]]))
        assert rows == [[1, 0], [0, 1]]
        assert pivots == [0, 1]

    def test_rref_drops_dependent_rows(self):
        """Test that only the independent rows are returned."""
        rows, pivots = rref(mat([[1, 2], [2, 4]]))
        assert rows == [[1, 2]]
        assert pivots == [0]
        assert rank(mat([[1, 2], [2, 4]])) == 1

    @pytest.mark.parametrize("rows, expected", [
        ([[2, 1], [1, 1]], 1),
        ([[0, 1], [1, 0]], -1),
        ([[1, 2], [2, 4]], 0),
        ([[Fraction(1, 2), 0], [0, 6]], 3),
    ])
    def test_determinant(self, rows, expected):
        """Test exact determinants including a row swap and a singular matrix."""
        assert determinant(mat(rows)) == expected

    def test_inverse(self):
        """Test the inverse of a unimodular 2x2 matrix."""
        assert inverse(mat([[2, 1], [1, 1]])) == mat([[1, -1], [-1, 2]])

    def test_inverse_singular(self):
        """Test that a singular matrix has no inverse."""
        with pytest.raises(PreconditionError):
            inverse(mat([[1, 2], [2, 4]]))


## INFO: THIS IS TO TEST THAT INVERSE REALLY INVERTS.
@given(st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_inverse_is_two_sided(entries):
    """Test M.M^-1 = M^-1.M = 1 for random invertible 2x2 matrices."""
    m = mat([entries[:2], entries[2:]])
    assume(determinant(m) != 0)
    m_inv = inverse(m)
    assert mat_mul(m, m_inv) == identity(2)
    assert mat_mul(m_inv, m) == identity(2)


class TestSolving:
    """Test solve_linear, kernel_basis and projection."""

    def test_solve_consistent(self):
        assert solve_linear(mat([[1, 1], [1, -1]]), vec([3, 1])) == vec([2, 1])

    def test_solve_inconsistent(self):
        """Test that an inconsistent system returns None."""
        assert solve_linear(mat([[1, 1], [2, 2]]), vec([1, 3])) is None

    def test_solve_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            solve_linear(mat([[1, 1]]), vec([1, 2]))

    def test_kernel_basis(self):
        """Test the primitive kernel basis of one equation in three unknowns."""
        basis = kernel_basis(mat([[1, 1, 1]]))
        assert basis == [vec([-1, 1, 0]), vec([-1, 0, 1])]
        for v in basis:
            assert mat_vec(mat([[1, 1, 1]]), v) == vec([0])

    def test_kernel_of_injective_map(self):
        assert kernel_basis(identity(2)) == []

    def test_kernel_without_rows(self):
        """Test that no equations leave the whole space."""
        assert kernel_basis([], n_cols=2) == [vec([1, 0]), vec([0, 1])]

    def test_project_onto_axis(self):
        assert project(vec([3, 5]), [vec([1, 0])]) == vec([3, 0])


@pytest.mark.parametrize("v, expected", [
    ([Fraction(1, 2), Fraction(-3, 4)], [2, -3]),
    ([4, 6], [2, 3]),
    ([0, -5], [0, -1]),
    ([0, 0], [0, 0]),
])
def test_primitive(v, expected):
    """Test that primitive keeps the direction and clears denominators."""
    assert primitive(vec(v)) == vec(expected)


class TestGram:
    """Test the positive-definiteness check on gram matrices."""

    @pytest.mark.parametrize("rows, expected", [
        ([[2, -1], [-1, 2]], True),
        ([[1, 2], [2, 1]], False),
        ([[1, 1], [0, 1]], False),
        ([[1, 0], [0, 0]], False),
    ])
    def test_is_positive_definite(self, rows, expected):
        assert is_positive_definite(mat(rows)) is expected

    def test_check_gram_rejects_indefinite(self):
        with pytest.raises(NotPositiveDefiniteError):
            check_gram(mat([[1, 2], [2, 1]]), 2)

    def test_check_gram_rejects_wrong_size(self):
        with pytest.raises(DimensionMismatchError):
            check_gram(identity(2), 3)


class TestSignCharacter:
    """Test sign characters and their lifts."""

    def test_values_on_lattice(self):
        """Test chi(a, b) = (-1)^a for chi = (-1, +1) on the standard basis."""
        chi = SignCharacter((vec([1, 0]), vec([0, 1])), (-1, 1))
        assert chi(vec([3, 2])) == -1
        assert chi(vec([2, 5])) == 1
        assert not chi.is_trivial

    def test_point_outside_lattice(self):
        chi = SignCharacter((vec([1, 0]), vec([0, 1])), (-1, 1))
        with pytest.raises(PreconditionError):
            chi(vec([Fraction(1, 2), 0]))

    @pytest.mark.parametrize("basis, values", [
        ((vec([1]),), (0,)),
        ((vec([1]), vec([2])), (1,)),
    ])
    def test_invalid_characters(self, basis, values):
        """Test that values must be signs, one per basis vector."""
        with pytest.raises(PreconditionError):
            SignCharacter(basis, values)

    def test_lift_blocked_by_index_two(self):
        """Test that chi(2) = -1 on 2Z does not extend to Z."""
        chi = SignCharacter((vec([2]),), (-1,))
        assert not sign_character_lifts(chi, [vec([1])])

    def test_trivial_character_always_lifts(self):
        chi = SignCharacter((vec([2]),), (1,))
        assert sign_character_lifts(chi, [vec([1])])

    def test_lift_to_same_lattice(self):
        """Test that a character of Z^2 lifts to a different basis of Z^2."""
        chi = SignCharacter((vec([1, 0]), vec([0, 1])), (-1, -1))
        assert sign_character_lifts(chi, [vec([1, 1]), vec([0, 1])])

    def test_lift_needs_superlattice(self):
        chi = SignCharacter((vec([1]),), (-1,))
        with pytest.raises(PreconditionError):
            sign_character_lifts(chi, [vec([2])])
