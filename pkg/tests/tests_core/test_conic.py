"""
Tests for conic functions and their operators.
"""
import pytest
from hypothesis import given, settings

from dscones.core.cones import cone_from_generators, psi
from dscones.core.conic import (
    ConicFunction,
    conic_equal,
    conic_star,
    conic_wedge,
    full_space,
    nearest_point_partition,
    origin,
    psi_conic,
    relint_function,
)
from dscones.core.ratgeom import identity
from dscones.utils.errors import DimensionMismatchError

from tests.tests_core.strategies import frac_vector, int_vectors, nonzero_int_vectors


RAY = cone_from_generators([(1,)])
QUADRANT = cone_from_generators([(1, 0), (0, 1)])
X_AXIS = cone_from_generators([(1, 0)])
Y_AXIS = cone_from_generators([(0, 1)])


class TestAlgebra:
    """Test sums, negation and scalar multiples."""

    def test_like_cones_combine(self):
        f = ConicFunction.indicator(QUADRANT)
        assert (f + f).terms == ((2, QUADRANT),)
        assert (f - f).is_zero_expression

    def test_evaluate(self):
        """Test pointwise values of 3 xi_Q - xi_{x-axis}."""
        f = 3 * ConicFunction.indicator(QUADRANT) - ConicFunction.indicator(X_AXIS)
        assert f(frac_vector(1, 1)) == 3
        assert f(frac_vector(2, 0)) == 2
        assert f(frac_vector(-1, 0)) == 0

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            ConicFunction.indicator(RAY) + ConicFunction.indicator(QUADRANT)
        with pytest.raises(DimensionMismatchError):
            ConicFunction.indicator(QUADRANT)(frac_vector(1))
        with pytest.raises(DimensionMismatchError):
            ConicFunction.from_terms(2, [(1, RAY)])


class TestRelativeInterior:
    """Test the face expansion of relative interiors."""

    @pytest.mark.parametrize("x, expected", [((1, 1), 1), ((1, 0), 0), ((0, 0), 0), ((-1, 1), 0)])
    def test_quadrant(self, x, expected):
        assert relint_function(QUADRANT)(frac_vector(*x)) == expected

    def test_expansion_terms(self):
        """Test xi of the open quadrant as an alternating sum of closed faces."""
        expected = ConicFunction.from_terms(2, [
            (1, QUADRANT), (-1, X_AXIS), (-1, Y_AXIS), (1, origin(2)),
        ])
        assert conic_equal(relint_function(QUADRANT), expected)

    def test_line_is_open(self):
        """Test that a line is its own relative interior."""
        line = cone_from_generators([(1, 0), (-1, 0)])
        assert conic_equal(relint_function(line), ConicFunction.indicator(line))


## INFO: THIS IS TO TEST THE FACE EXPANSION AGAINST THE DIRECT MEMBERSHIP TEST.
@settings(max_examples=40, deadline=None)
@given(nonzero_int_vectors(2), nonzero_int_vectors(2), int_vectors(2))
def test_relint_function_matches_membership(g1, g2, x):
    """Test xi_{relint C}(x) = [x in relint C] on random two-generator cones."""
    cone = cone_from_generators([g1, g2])
    assert relint_function(cone)(x) == int(cone.relint_contains(x))


class TestDualities:
    """Test the star and wedge operators."""

    def test_star_of_ray(self):
        """Test xi_C -> -xi of the open ray."""
        star = conic_star(ConicFunction.indicator(RAY))
        assert [star(frac_vector(t)) for t in (-1, 0, 1)] == [0, 0, -1]

    @pytest.mark.parametrize("cone", [RAY, QUADRANT, X_AXIS, cone_from_generators([(1, 0), (1, 2)])])
    def test_star_is_an_involution(self, cone):
        f = ConicFunction.indicator(cone)
        assert conic_equal(conic_star(conic_star(f)), f)

    def test_wedge_of_ray(self):
        """Test that the ray maps to the open ray of its dual."""
        wedge = conic_wedge(ConicFunction.indicator(RAY))
        assert [wedge(frac_vector(t)) for t in (-1, 0, 1)] == [0, 0, 1]

    def test_wedge_of_full_space(self):
        """Test that the whole plane maps to the origin."""
        wedge = conic_wedge(ConicFunction.indicator(full_space(2)))
        assert conic_equal(wedge, ConicFunction.indicator(origin(2)))


def test_psi_conic_is_linear():
    """Test psi of a combination against the combination of psi values."""
    f = 3 * ConicFunction.indicator(RAY) - ConicFunction.indicator(origin(1))
    for x, lam in [((1,), (-1,)), ((-1,), (1,)), ((0,), (-1,))]:
        x, lam = frac_vector(*x), frac_vector(*lam)
        assert psi_conic(f, x, lam) == 3 * psi(RAY, x, lam) - psi(origin(1), x, lam)


class TestConicEqual:
    """Test extensional equality."""

    def test_boundary_difference_is_detected(self):
        """Test that functions differing only on the boundary are told apart."""
        assert not conic_equal(relint_function(QUADRANT), ConicFunction.indicator(QUADRANT))

    def test_different_cones(self):
        assert not conic_equal(ConicFunction.indicator(QUADRANT), ConicFunction.indicator(X_AXIS))

    def test_nearest_point_partition_of_quadrant(self):
        """Test that the nearest-point pieces of the quadrant cover the plane once."""
        partition = nearest_point_partition(QUADRANT, identity(2))
        assert conic_equal(partition, ConicFunction.indicator(full_space(2)))
