"""
Tests for the chamber sums psi_R, m_R, the cbar recursion, d-tables and b_R.
"""
import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import assume, given, settings, strategies as st

from dscones.core.constants import (
    BQuery,
    b_constant,
    cbar,
    cbar_table,
    d_table,
    d_vee_table,
    m_R,
    psi_R,
    twisted_prediction,
    twisted_sum_coroot,
)
from dscones.core.ratgeom import dot
from dscones.core.rootsys import empty_system, random_point, root_system, sign_characters
from dscones.utils.errors import (
    MathPreconditionError,
    NotRegularError,
    OrbitError,
)
from dscones.verify.golden import load_golden
from dscones.verify.sampling import is_generic_functional

from tests.tests_core.strategies import frac_vector, int_vectors


GOLDEN_DIR = Path(__file__).resolve().parents[2] / "golden" / "v1"


class TestRankOne:
    """Hand-computed values on A1, where X = Q with root 1 and coroot 2."""

    @pytest.mark.parametrize("x, lam, expected", [(1, -1, 2), (1, 1, 0), (-1, 1, 2), (-1, -1, 0)])
    def test_m_R(self, a1, x, lam, expected):
        """Test m_R(x, lam) = 2 exactly when x and lam have opposite signs."""
        assert m_R(a1, frac_vector(x), frac_vector(lam)) == expected

    def test_psi_R_changes_sign_with_the_base_chamber(self, a1):
        """Test psi_R(s C+, x, lam) = -psi_R(C+, x, lam)."""
        base = a1.base_chamber
        other = a1.element_from_word((0,)).act_on_chamber(base)
        x, lam = frac_vector(1), frac_vector(-1)
        assert psi_R(a1, base, x, lam) == 2
        assert psi_R(a1, other, x, lam) == -2

    def test_cbar_matches_m_R(self, a1):
        """Test the recursion oracle on both chambers."""
        assert cbar(a1, frac_vector(1), frac_vector(-1)) == 2
        assert cbar(a1, frac_vector(-1), frac_vector(-1)) == 0

    def test_b_constant(self, a1):
        """Test b_R(1, C+; 1, -1) = 1."""
        query = BQuery(a1.base_chamber, frac_vector(1), frac_vector(1), frac_vector(-1))
        assert b_constant(query) == 1

    def test_b_constant_orbit_check(self, a1):
        """Test that lambda outside W tau is refused."""
        with pytest.raises(OrbitError):
            b_constant(BQuery(a1.base_chamber, frac_vector(1), frac_vector(1), frac_vector(2)))

    def test_m_R_needs_regular_lambda(self, a1):
        """Test that lambda = 0 is refused."""
        with pytest.raises(NotRegularError):
            m_R(a1, frac_vector(1), frac_vector(0))


def test_empty_system_constants():
    """Test that b_R and cbar are 1 on the system with no roots."""
    system = empty_system(0)
    assert b_constant(BQuery(system.base_chamber, (), (), ())) == 1
    assert cbar(system, (), ()) == 1


## INFO: THIS IS TO TEST THAT -1 NOT IN W IS REPORTED AS A MATHEMATICAL PRECONDITION.
def test_minus_one_required(a2):
    """Test d-tables and cbar on A2."""
    with pytest.raises(MathPreconditionError):
        d_table(a2)
    with pytest.raises(MathPreconditionError):
        cbar(a2, a2.chamber_point(a2.base_chamber), frac_vector(1, 3))


@settings(max_examples=25, deadline=None)
@given(int_vectors(2), int_vectors(2))
def test_psi_R_vanishes_without_minus_one(x, lam):
    """Test psi_R = 0 on regular inputs when -1 is not in W."""
    a2 = root_system("A2")
    x = tuple(c + Fraction(1, 7) for c in x)
    lam = tuple(c + Fraction(1, 5) for c in lam)
    assume(a2.is_regular(x) and a2.is_R_regular(lam))
    assert psi_R(a2, a2.base_chamber, x, lam) == 0


@settings(max_examples=20, deadline=None)
@given(int_vectors(2), int_vectors(2), st.integers(0, 7))
def test_psi_R_chamber_equivariance(x, lam, k):
    """Test psi_R(w C0, x, lam) = eps(w) psi_R(C0, x, lam) on B2."""
    b2 = root_system("B2")
    w = b2.weyl_group()[k]
    base = b2.base_chamber
    assert psi_R(b2, w.act_on_chamber(base), x, lam) == w.epsilon * psi_R(b2, base, x, lam)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_cbar_recursion_matches_m_R(seed):
    """Test cbar_R = m_R at random generic points of B2."""
    b2 = root_system("B2")
    rng = random.Random(seed)
    x = random_point(b2.dim, rng, b2.is_regular)
    lam = random_point(b2.dim, rng, lambda v: is_generic_functional(b2, v))
    assert cbar(b2, x, lam) == m_R(b2, x, lam)


## INFO: THIS IS TO TEST THE STORED d-TABLES AGAINST A FRESH COMPUTATION.
@pytest.mark.parametrize("label", ["A1", "A1xA1", "A1xA1xA1", "B2", "G2"])
def test_d_table_matches_golden(label):
    """Test d(w) over W against golden/v1."""
    golden = load_golden(label, GOLDEN_DIR)
    assert golden is not None
    table = d_table(root_system(label))
    assert golden.q == root_system(label).q_invariant()
    assert table.by_word() == golden.table


## INFO: THIS IS TO TEST THAT cbar DEPENDS ON lambda ONLY THROUGH ITS R-CHAMBER.
def test_cbar_table_is_constant_on_r_chambers(b2):
    """Test that lambdas in one cell share the cached table and an uncached walk gives it too."""
    rng = random.Random(4)
    tables = {}
    for _ in range(60):
        lam = random_point(b2.dim, rng, lambda v: is_generic_functional(b2, v))
        key = tuple(dot(lam, omega) > 0 for omega in b2.coweight_rays())
        key = (b2.dual().chamber_of(lam).signs, key)
        table = cbar_table(b2, lam)
        assert tables.setdefault(key, table) is table
        assert cbar_table(b2, lam, rng=random.Random(0)) == table
    assert len(tables) > 1


class TestRankThreeGolden:
    """Test the stored B3 and C3 tables without recomputing them."""

    def test_tables_cover_the_weyl_group(self):
        for label in ("B3", "C3"):
            golden = load_golden(label, GOLDEN_DIR)
            assert golden is not None and golden.q == 6
            assert len(golden.table) == len(root_system(label).weyl_group()) == 48
            assert golden.table["e"] == 0

    def test_dual_types_share_one_table(self):
        """Test d for C3 equals d for B3, since d^vee = d."""
        assert load_golden("B3", GOLDEN_DIR).table == load_golden("C3", GOLDEN_DIR).table

    def test_nonzero_values(self):
        table = load_golden("B3", GOLDEN_DIR).table
        nonzero = {w: v for w, v in table.items() if v}
        assert len(nonzero) == 8
        assert nonzero["s1*s2*s1*s3*s2*s1*s3"] == -8
        assert sorted(nonzero.values()) == [-8] + [8] * 7


def test_d_table_symmetries(b2):
    """Test d(e) = 0 and that d^vee of B2 takes the same values as d."""
    table = d_table(b2)
    vee = d_vee_table(b2)
    assert table.value(()) == 0
    assert sorted(table.by_word().values()) == sorted(vee.by_word().values())


def test_d_table_is_seed_independent(b2):
    """Test that two seeds give the same table."""
    assert d_table(b2, seed=1).by_word() == d_table(b2, seed=99).by_word()


## INFO: THIS IS TO TEST THAT THE TRIVIAL CHARACTER GIVES BACK psi_R.
def test_twisted_sum_trivial_character(b2):
    """Test the twisted sum with chi = 1 and its sign-subsystem prediction."""
    chi = next(c for c in sign_characters(b2, "coroot") if c.is_trivial)
    x = b2.chamber_point(b2.base_chamber)
    lam = frac_vector(-3, Fraction(-5, 7))
    base = b2.base_chamber
    expected = psi_R(b2, base, x, lam)
    assert twisted_sum_coroot(b2, base, chi, x, lam) == expected
    assert twisted_prediction(b2, base, chi, "coroot", x, lam) == expected
