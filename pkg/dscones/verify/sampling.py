"""
Random inputs for the verification suites: small integer cones, points that
straddle a single wall, and jittered R-chamber samples.

All draws go through the caller's random.Random, so a suite is reproducible
from its seed.
"""
import random
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from dscones.core.cones import Cone, cone_from_generators, cone_from_inequalities, subspace
from dscones.core.ratgeom import (
    Vector,
    add,
    determinant,
    dot,
    is_zero,
    kernel_basis,
    neg,
    primitive,
    rank,
    scale,
    sub,
    vsum,
)
from dscones.core.rootsys import RootSystem, subsystem_wall
from dscones.utils.errors import DsConesError


def int_vector(dim: int, rng: random.Random, bound: int = 3) -> Vector:
    """A nonzero integer vector with entries in [-bound, bound]."""
    while True:
        v = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(dim))
        if not is_zero(v):
            return v


def rational_vector(dim: int, rng: random.Random, bound: int = 4) -> Vector:
    return tuple(Fraction(rng.randint(-bound, bound)) + Fraction(rng.randint(1, 96), 97) for _ in range(dim))


def random_cone(dim: int, rng: random.Random, max_gens: Optional[int] = None,
                lineality: bool = False) -> Cone:
    """Cone on a few random integer generators, with an optional lineality line."""
    count = rng.randint(1, max_gens or dim + 2)
    gens = [int_vector(dim, rng) for _ in range(count)]
    if lineality:
        line = int_vector(dim, rng)
        gens += [line, neg(line)]
    return cone_from_generators(gens, dim=dim)


def random_full_pointed_cone(dim: int, rng: random.Random, attempts: int = 100) -> Cone:
    """A full-dimensional cone without lineality."""
    for _ in range(attempts):
        c = random_cone(dim, rng, max_gens=dim + 2)
        if c.dim == dim and not c.lineality:
            return c
    raise DsConesError(f"could not draw a full pointed cone in dimension {dim}")


def random_simplicial(dim: int, rng: random.Random) -> Cone:
    while True:
        gens = [int_vector(dim, rng) for _ in range(dim)]
        if determinant(gens) != 0:
            return cone_from_generators(gens, dim=dim)


def random_subspace(dim: int, rng: random.Random) -> Cone:
    k = rng.randint(0, dim)
    return subspace([int_vector(dim, rng) for _ in range(k)], dim)


def mixed_cone(dim: int, rng: random.Random) -> Cone:
    """Pointed, with lineality, or a subspace, in roughly 3:1:1 proportion."""
    roll = rng.random()
    if roll < 0.2:
        return random_subspace(dim, rng)
    return random_cone(dim, rng, lineality=roll < 0.4)


def point_in_cone(cone: Cone, rng: random.Random, interior: bool = False) -> Vector:
    """
    A combination of the generators with non-negative ray coefficients.

    With interior=True every ray gets a positive coefficient, so the point is
    in the relative interior.
    """
    n = cone.ambient_dim
    parts = []
    for r in cone.rays:
        low = 1 if interior else 0
        parts.append(scale(Fraction(rng.randint(low, 3)), r))
    for line in cone.lineality:
        parts.append(scale(Fraction(rng.randint(-2, 2)), line))
    return vsum(parts, n)


def point_in_span(basis: Sequence[Vector], rng: random.Random, n: int) -> Vector:
    return vsum((scale(Fraction(rng.randint(-3, 3)) + Fraction(rng.randint(1, 30), 31), b) for b in basis), n)


def split_cone(cone: Cone, h: Vector) -> Tuple[Cone, Cone, Cone]:
    """(C+, C-, C0) for the functional h."""
    ineqs = list(cone.facets)
    eqs = list(cone.equations)
    n = cone.ambient_dim
    plus = cone_from_inequalities(ineqs + [h], eqs, dim=n)
    minus = cone_from_inequalities(ineqs + [neg(h)], eqs, dim=n)
    zero = cone_from_inequalities(ineqs, eqs + [h], dim=n)
    return plus, minus, zero


def splitting_functional(cone: Cone, rng: random.Random, attempts: int = 100) -> Optional[Vector]:
    """A functional taking both signs on the cone, or None."""
    gens = cone.generators
    for _ in range(attempts):
        h = int_vector(cone.ambient_dim, rng)
        values = [dot(h, g) for g in gens]
        if any(v > 0 for v in values) and any(v < 0 for v in values):
            return h
    return None


##> ============================================================================
##> WALL CROSSING
##> ============================================================================

def _parallel(u: Vector, v: Vector) -> bool:
    return rank([u, v]) < 2


def off_walls(center_basis: Sequence[Vector], avoid: Sequence[Vector], rng: random.Random, n: int,
              accept: Optional[Callable[[Vector], bool]] = None, attempts: int = 200) -> Vector:
    """A random point of span(center_basis) on none of the hyperplanes in avoid."""
    for _ in range(attempts):
        y = point_in_span(center_basis, rng, n)
        if all(dot(a, y) != 0 for a in avoid) and (accept is None or accept(y)):
            return y
    raise DsConesError("could not draw a point off the given walls")


def straddle(center: Vector, direction: Vector, normals: Sequence[Vector]) -> Tuple[Vector, Vector]:
    """
    center +/- t * direction, with t small enough that no normal in `normals`
    nonzero at center changes sign.
    """
    t = Fraction(1)
    for a in normals:
        at_center = dot(a, center)
        slope = dot(a, direction)
        if at_center != 0 and slope != 0:
            t = min(t, abs(at_center) / (2 * abs(slope)))
    step = scale(t, direction)
    return add(center, step), sub(center, step)


def wall_crossing(wall_normal: Vector, direction: Vector, normals: Sequence[Vector], rng: random.Random,
                  accept: Optional[Callable[[Vector], bool]] = None) -> Tuple[Vector, Vector, Vector]:
    """
    (x, x', y): y a generic point of ker(wall_normal), x and x' on either side
    of it and separated by no other hyperplane of `normals`. x is on the side
    where wall_normal is positive.

    y avoids every normal not parallel to wall_normal, so its restriction to
    ker(wall_normal) is regular for the wall subsystem there.
    """
    n = len(wall_normal)
    avoid = [a for a in normals if not _parallel(primitive(a), primitive(wall_normal))]
    y = off_walls(kernel_basis([wall_normal]), avoid, rng, n, accept)
    x, x_prime = straddle(y, direction, normals)
    if dot(wall_normal, x) < 0:
        x, x_prime = x_prime, x
    return x, x_prime, y


def jitter_within(point: Vector, normals: Sequence[Vector], rng: random.Random) -> Vector:
    """A random point of the open cell of `point` in the arrangement of `normals`."""
    direction = rational_vector(len(point), rng, bound=1)
    moved, _ = straddle(point, direction, normals)
    return moved


def is_generic_functional(system: RootSystem, lam: Vector) -> bool:
    """R-regular, and recursively so after restriction to every wall system."""
    if system.dim == 0:
        return True
    if not system.dual().is_regular(lam) or not system.is_R_regular(lam):
        return False
    if not system.minus_one_in_W():
        return True
    for idx in system.base_chamber.positive_indices:
        wall = subsystem_wall(system, system.roots[idx])
        if not is_generic_functional(wall.system, wall.functional(lam)):
            return False
    return True


def cells_of(samples: Sequence[Vector], normals: Sequence[Vector]) -> List[Vector]:
    """The samples that lie on none of the hyperplanes."""
    return [p for p in samples if all(dot(a, p) != 0 for a in normals)]
