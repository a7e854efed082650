"""
Tests for the random input generators used by the suites.
"""
import random
from fractions import Fraction

import pytest

from dscones.core.ratgeom import dot
from dscones.core.rootsys import root_system, subsystem_wall
from dscones.verify import sampling


def test_wall_crossing_sides():
    """Test that x and x' straddle only the requested wall."""
    rng = random.Random(3)
    normals = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)), (Fraction(1), Fraction(1))]
    wall = normals[0]
    x, x_prime, y = sampling.wall_crossing(wall, wall, normals, rng)

    assert dot(wall, y) == 0
    assert dot(wall, x) > 0 > dot(wall, x_prime)
    for a in normals[1:]:
        assert (dot(a, x) > 0) == (dot(a, x_prime) > 0) == (dot(a, y) > 0)


## INFO: THIS IS TO TEST THAT WALL POINTS ARE REGULAR FOR THE WALL SUBSYSTEM.
@pytest.mark.parametrize("label", ["B2", "G2", "B3"])
def test_wall_point_is_regular_on_the_wall(label):
    """Test y restricted to ker(alpha) against every root of R_alpha."""
    system = root_system(label)
    rng = random.Random(11)
    for idx in system.base_chamber.positive_indices:
        alpha = system.roots[idx]
        _, _, y = sampling.wall_crossing(alpha, system.coroots[idx], system.roots, rng)
        wall = subsystem_wall(system, alpha)
        assert wall.system.is_regular(wall.point(y))


def test_point_in_cone_interior():
    """Test that interior points lie in the relative interior."""
    rng = random.Random(5)
    cone = sampling.random_full_pointed_cone(3, rng)
    for _ in range(5):
        assert cone.relint_contains(sampling.point_in_cone(cone, rng, interior=True))


def test_split_cone_pieces():
    """Test that the cut pieces lie on their sides of h."""
    rng = random.Random(1)
    cone = sampling.random_full_pointed_cone(2, rng)
    h = sampling.splitting_functional(cone, rng)
    if h is None:
        return
    plus, minus, zero = sampling.split_cone(cone, h)
    assert all(dot(h, g) >= 0 for g in plus.generators)
    assert all(dot(h, g) <= 0 for g in minus.generators)
    assert all(dot(h, g) == 0 for g in zero.generators)


## INFO: THIS IS TO TEST THE RECURSIVE GENERICITY TEST ON B2.
def test_is_generic_functional():
    """Test a functional on a coroot hyperplane and a random one."""
    b2 = root_system("B2")
    c1, c2 = b2.coroots[0]
    assert not sampling.is_generic_functional(b2, (c2, -c1))
    assert sampling.is_generic_functional(b2, (Fraction(13, 97), Fraction(-29, 89)))
