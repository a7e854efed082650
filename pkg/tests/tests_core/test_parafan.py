"""
Tests for Levi fans, Kostant representatives and the truncated modules E^nu_P.
"""
from fractions import Fraction

import pytest

from dscones.core.conic import ConicFunction, conic_equal
from dscones.core.parafan import (
    NU_MINUS_INF,
    NU_PLUS_INF,
    cell_label,
    identity_5_6_check,
    kostant_reps,
    levi_fan,
    nu_middle,
    truncated_cohomology,
    untruncated_weights,
)
from dscones.core.rootsys import root_system
from dscones.utils.errors import PreconditionError

from tests.tests_core.strategies import frac_vector


## INFO: THIS IS TO TEST |W_L \ W| FOR EVERY LEVI SUBSET OF A2 AND B2.
@pytest.mark.parametrize("label, subset, count", [
    ("A2", (), 6),
    ("A2", (0,), 3),
    ("A2", (1,), 3),
    ("A2", (0, 1), 1),
    ("B2", (), 8),
    ("B2", (1,), 4),
    ("G2", (0,), 6),
])
def test_kostant_count(label, subset, count):
    """Test the number of Kostant representatives and that e comes first."""
    reps = kostant_reps(root_system(label), subset)
    assert len(reps) == count
    assert reps[0].word == ()


def test_levi_subset_must_be_simple(a2):
    """Test that an index past the rank is refused."""
    with pytest.raises(PreconditionError):
        levi_fan(a2, (2,))


class TestLeviFan:
    """Test the fan of a_M for A2."""

    def test_torus_fan_has_one_cone_per_chamber(self, a2):
        """Test J = {} gives |W| open cones."""
        fan = levi_fan(a2, ())
        assert fan.dim == 2
        assert len(fan.open_cells()) == 6

    def test_full_levi_is_a_point(self, a2):
        """Test J = all simple roots gives the single cone {0}."""
        fan = levi_fan(a2, (0, 1))
        assert fan.dim == 0
        assert len(fan.cells) == 1

    def test_partition(self, a2):
        """Test that the relatively open cones partition a_M."""
        fan = levi_fan(a2, (0,))
        assert fan.dim == 1
        assert len(fan.open_cells()) == 2
        assert conic_equal(fan.partition_function(), ConicFunction.indicator(fan.space_cone()))

    def test_standard_cell_label(self, a2):
        """Test that the standard open cone is labelled by e."""
        fan = levi_fan(a2, ())
        assert cell_label(fan, fan.standard_cell()) == "e"
        assert fan.cell_from_word(()) is fan.standard_cell()


class TestTruncatedCohomology:
    """Test E^nu_P on A1 and A2."""

    def test_middle_truncation_rank_one(self, a1):
        """Test that nu = nu_m keeps the single term lambda."""
        fan = levi_fan(a1, ())
        terms = truncated_cohomology(a1, (), fan.standard_cell().index, frac_vector(3), nu_middle(a1)).terms
        assert [(t.sign, t.weight, t.kostant_length, t.word) for t in terms] == [(1, frac_vector(3), 0, ())]

    def test_sentinels(self, a2):
        """Test that -inf keeps every Kostant weight and +inf none on a proper open cone."""
        fan = levi_fan(a2, (0,))
        p = fan.open_cells()[0].index
        lam = frac_vector(1, 1)
        assert len(truncated_cohomology(a2, (0,), p, lam, NU_MINUS_INF)) == 3
        assert len(truncated_cohomology(a2, (0,), p, lam, NU_PLUS_INF)) == 0

    def test_untruncated_weights_do_not_depend_on_p(self, a2):
        """Test the multiset of Kostant weights over every open cone."""
        fan = levi_fan(a2, ())
        weights = [untruncated_weights(a2, (), p.index, frac_vector(2, 1)) for p in fan.open_cells()]
        assert all(w == weights[0] for w in weights)

    def test_lambda_must_be_dominant(self, a1):
        """Test that a non-dominant lambda is refused."""
        fan = levi_fan(a1, ())
        with pytest.raises(PreconditionError):
            truncated_cohomology(a1, (), fan.standard_cell().index, frac_vector(-1), NU_MINUS_INF)

    def test_p_must_be_open(self, a1):
        """Test that the zero cone is refused as P."""
        fan = levi_fan(a1, ())
        closed = next(c for c in fan.cells if c.dim < fan.dim)
        with pytest.raises(PreconditionError):
            truncated_cohomology(a1, (), closed.index, frac_vector(1), NU_MINUS_INF)


## INFO: THIS IS TO TEST THE FAN FORM OF THE FACE-SUM IDENTITY AT THE ORIGIN AND OFF IT.
@pytest.mark.parametrize("x", [(0, 0), (Fraction(3, 7), Fraction(-2, 5))])
def test_face_sum_identity(a2, x):
    """Test the identity over the torus fan of A2."""
    assert identity_5_6_check(a2, (), x, frac_vector(Fraction(1, 3), 2), frac_vector(Fraction(-1, 2), Fraction(1, 9)))
