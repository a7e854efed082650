"""
Levi fans, Kostant representatives and the truncated modules E^nu_P, over
every Levi subset J of the base simple roots.
"""
import random
from fractions import Fraction
from itertools import combinations
from typing import List, Tuple

from dscones.core.conic import ConicFunction, conic_equal
from dscones.core.parafan import (
    NU_MINUS_INF,
    NU_PLUS_INF,
    LeviFan,
    identity_5_6_check,
    kostant_reps,
    levi_fan,
    levi_projection,
    nu_middle,
    nu_restrict,
    truncated_cohomology,
    untruncated_weights,
)
from dscones.core.ratgeom import Vector, scale, vsum
from dscones.core.rootsys import RootSystem, subsystem_on_x
from dscones.verify.runner import Case
from dscones.verify import sampling


SUITE = "section5"

# partition checks refine an arrangement in the ambient space
_MAX_PARTITION_DIM = 3
_FACE_SUM_CASES = 200


def _levi_subsets(system: RootSystem) -> List[Tuple[int, ...]]:
    simple = range(system.rank)
    return [s for k in range(system.rank + 1) for s in combinations(simple, k)]


def _dominant_weight(system: RootSystem, rng: random.Random) -> Vector:
    weights = system.lattice_basis("weight")
    return vsum((scale(Fraction(rng.randint(0, 3)), w) for w in weights), system.dim)


def _partition_case(cid: str, fan: LeviFan) -> Case:
    def check():
        return True, conic_equal(fan.partition_function(), ConicFunction.indicator(fan.space_cone()))
    return Case(cid, check, {"levi": list(fan.levi_subset)})


def _open_count_case(cid: str, system: RootSystem, fan: LeviFan, expected: int) -> Case:
    def check():
        return expected, len(fan.open_cells())
    return Case(cid, check, {"levi": list(fan.levi_subset)})


def _kostant_case(cid: str, system: RootSystem, fan: LeviFan) -> Case:
    def check():
        levi = subsystem_on_x(system, fan.m_indices, f"{system.label}_L").system
        w_levi = [system.element(u.matrix) for u in levi.weyl_group()]
        reps = kostant_reps(system, fan.levi_subset)
        minimal = all((u * w).length >= w.length for w in reps for u in w_levi)
        return (len(system.weyl_group()), True), (len(reps) * len(w_levi), minimal)
    return Case(cid, check, {"levi": list(fan.levi_subset)})


def _nu_compatibility_case(cid: str, system: RootSystem, fan: LeviFan, p_index: int, nu: Vector) -> Case:
    def check():
        p = fan.cell(p_index)
        restricted = nu_restrict(system, nu, p)
        expected = [nu_restrict(system, nu, q) for q in fan.over(p)]
        return expected, [levi_projection(system, q.levi_indices, restricted) for q in fan.over(p)]
    return Case(cid, check, {"levi": list(fan.levi_subset), "p": p_index, "nu": nu})


def _face_sum_case(cid: str, system: RootSystem, fan: LeviFan, x, mu, nu) -> Case:
    def check():
        return True, identity_5_6_check(system, fan.levi_subset, x, mu, nu)
    return Case(cid, check, {"levi": list(fan.levi_subset), "x": x, "mu": mu, "nu": nu})


def _sentinel_case(cid: str, system: RootSystem, fan: LeviFan, p_index: int, lam: Vector) -> Case:
    everything = len(system.weyl_group()) // len(subsystem_on_x(system, fan.m_indices, "L").system.weyl_group())
    at_plus = everything if fan.dim == 0 else 0

    def check():
        low = truncated_cohomology(system, fan.levi_subset, p_index, lam, NU_MINUS_INF)
        high = truncated_cohomology(system, fan.levi_subset, p_index, lam, NU_PLUS_INF)
        return (everything, at_plus), (len(low), len(high))
    return Case(cid, check, {"levi": list(fan.levi_subset), "p": p_index, "lambda": lam})


def _middle_case(cid: str, system: RootSystem, fan: LeviFan, lam: Vector) -> Case:
    def check():
        p = fan.standard_cell().index
        terms = truncated_cohomology(system, fan.levi_subset, p, lam, nu_middle(system)).terms
        return [(1, lam)], [(t.sign, t.weight) for t in terms]
    return Case(cid, check, {"lambda": lam})


def _untruncated_case(cid: str, system: RootSystem, fan: LeviFan, lam: Vector) -> Case:
    def check():
        weights = [untruncated_weights(system, fan.levi_subset, p.index, lam) for p in fan.open_cells()]
        return [weights[0]] * len(weights), weights
    return Case(cid, check, {"levi": list(fan.levi_subset), "lambda": lam})


def build_cases(system: RootSystem, rng: random.Random, n: int) -> List[Case]:
    label = system.label
    cases: List[Case] = []
    subsets = _levi_subsets(system)
    full = tuple(range(system.rank))

    for subset in subsets:
        fan = levi_fan(system, subset)
        tag = "J" + "".join(str(i + 1) for i in subset) if subset else "J0"
        if system.dim <= _MAX_PARTITION_DIM:
            cases.append(_partition_case(f"{label}/fan_partition/{tag}", fan))
        if not subset:
            cases.append(_open_count_case(f"{label}/open_cells/{tag}", system, fan, len(system.weyl_group())))
        if subset == full:
            cases.append(_open_count_case(f"{label}/open_cells/{tag}", system, fan, 1))
        cases.append(_kostant_case(f"{label}/kostant/{tag}", system, fan))

        open_cells = fan.open_cells()
        lam = _dominant_weight(system, rng)
        cases.append(_untruncated_case(f"{label}/untruncated/{tag}", system, fan, lam))
        for p in open_cells:
            cases.append(_sentinel_case(f"{label}/sentinels/{tag}.{p.index}", system, fan, p.index, lam))

        for k in range(-(-max(n, _FACE_SUM_CASES) // len(subsets))):
            nu = sampling.rational_vector(system.dim, rng)
            p = rng.choice(open_cells)
            cases.append(_nu_compatibility_case(f"{label}/nu_compatibility/{tag}.{k}", system, fan, p.index, nu))
            x = sampling.point_in_span(fan.space_basis, rng, system.dim)
            if k == 0:
                x = tuple(Fraction(0) for _ in range(system.dim))
            mu = sampling.rational_vector(system.dim, rng)
            cases.append(_face_sum_case(f"{label}/face_sum_identity/{tag}.{k}", system, fan, x, mu, nu))

    if system.rank == 1:
        fan = levi_fan(system, ())
        cases.append(_middle_case(f"{label}/middle_weight/0", system, fan, _dominant_weight(system, rng)))
    return cases
