"""
Nearest-face partition and the Langlands combinatorial lemma, with X
identified with X* through the W-invariant form of the system under test.
"""
import random
from typing import List

from dscones.core.cones import Cone, accepting_faces, langlands_lhs, negate
from dscones.core.conic import (
    ConicFunction,
    conic_equal,
    dual_face_sum,
    full_space,
    nearest_point_partition,
    origin,
    perp_face_sum,
)
from dscones.core.ratgeom import Matrix
from dscones.core.rootsys import RootSystem
from dscones.verify.runner import Case
from dscones.verify import sampling


SUITE = "appendixB"

_MAX_CONIC_CASES = 6
_NEAREST_FACE_CASES = 500
_LANGLANDS_CASES = 100


def _unique_face_case(cid: str, cone: Cone, gram: Matrix, x) -> Case:
    def check():
        return 1, len(accepting_faces(cone, gram, x))
    return Case(cid, check, {"cone": repr(cone), "x": x})


def _langlands_case(cid: str, cone: Cone, gram: Matrix, x, y) -> Case:
    def check():
        expected = (-1) ** cone.dim if cone.relint_contains(y) else 0
        return expected, langlands_lhs(cone, gram, x, y)
    return Case(cid, check, {"cone": repr(cone), "x": x, "y": y})


def _partition_case(cid: str, cone: Cone, gram: Matrix) -> Case:
    n = cone.ambient_dim

    def check():
        one = ConicFunction.indicator(full_space(n))
        return True, conic_equal(nearest_point_partition(cone, gram), one)
    return Case(cid, check, {"cone": repr(cone)})


def _face_sum_case(cid: str, cone: Cone, gram: Matrix) -> Case:
    n = cone.ambient_dim

    def check():
        if cone.is_subspace:
            perp = ((-1) ** (n - cone.dim)) * ConicFunction.indicator(full_space(n))
            dual = ((-1) ** cone.dim) * ConicFunction.indicator(origin(n))
        else:
            perp = dual = ConicFunction.zero(n)
        return (True, True), (conic_equal(perp_face_sum(cone, gram), perp),
                              conic_equal(dual_face_sum(cone, gram), dual))
    return Case(cid, check, {"cone": repr(cone), "subspace": cone.is_subspace})


def build_cases(system: RootSystem, rng: random.Random, n: int) -> List[Case]:
    d = system.dim
    gram = system.invariant_gram()
    label = system.label
    cases: List[Case] = []

    for k in range(max(n, _NEAREST_FACE_CASES)):
        cone = sampling.mixed_cone(d, rng)
        x = sampling.rational_vector(d, rng)
        cases.append(_unique_face_case(f"{label}/unique_nearest_face/{k}", cone, gram, x))
        if k >= max(n, _LANGLANDS_CASES):
            continue
        choice = k % 3
        if choice == 0:
            y = sampling.point_in_cone(cone, rng, interior=True)
        elif choice == 1:
            y = sampling.point_in_cone(negate(cone), rng)
        else:
            y = sampling.rational_vector(d, rng)
        cases.append(_langlands_case(f"{label}/langlands/{k}", cone, gram, x, y))

    if system.dim >= 2:
        for k, chamber in enumerate(system.chambers()):
            cone = system.closed_chamber_cone(chamber)
            x = sampling.rational_vector(d, rng)
            y = sampling.point_in_cone(cone, rng, interior=k % 2 == 0) if k % 3 else sampling.rational_vector(d, rng)
            cases.append(_langlands_case(f"{label}/langlands_chamber/{k}", cone, gram, x, y))

    for k in range(min(n, _MAX_CONIC_CASES)):
        cone = sampling.mixed_cone(d, rng)
        cases.append(_partition_case(f"{label}/nearest_point_partition/{k}", cone, gram))
        cases.append(_face_sum_case(f"{label}/face_sums/{k}", cone, gram))
    return cases
