"""
Crossing a root hyperplane in x, the wall systems R_alpha on ker(alpha), and
the duality between psi_R and psi_{R^vee}.
"""
import random
from typing import List

from dscones.core.constants import psi_R
from dscones.core.rootsys import Chamber, RootSystem, random_point, subsystem_wall
from dscones.utils.errors import MathPreconditionError
from dscones.verify.runner import Case
from dscones.verify import sampling


SUITE = "section2"

# transversal points per wall
_POINTS_PER_WALL = 10
_DUALITY_CASES = 100


def _x_wall_case(cid: str, system: RootSystem, idx: int, c0: Chamber, rng: random.Random) -> Case:
    alpha = system.roots[idx]
    x, x_prime, y = sampling.wall_crossing(alpha, system.coroots[idx], system.roots, rng)
    if c0.signs[idx] < 0:
        x, x_prime = x_prime, x
    lam = random_point(system.dim, rng, system.is_R_regular)

    def check():
        wall = subsystem_wall(system, alpha, c0)
        expected = 2 * psi_R(wall.system, wall.chamber(c0), wall.point(y), wall.functional(lam))
        return expected, psi_R(system, c0, x, lam) - psi_R(system, c0, x_prime, lam)
    return Case(cid, check, {"alpha": alpha, "chamber": c0.word(), "x": x, "x_prime": x_prime, "lambda": lam})


def _wall_system_case(cid: str, system: RootSystem, idx: int) -> Case:
    def check():
        wall = subsystem_wall(system, system.roots[idx])
        return (True, True), (wall.system.minus_one_in_W(), wall.system.spans)
    return Case(cid, check, {"alpha": system.roots[idx]})


def _duality_case(cid: str, system: RootSystem, c0: Chamber, x, lam) -> Case:
    def check():
        dual = system.dual()
        expected = (-1) ** system.q_invariant() * psi_R(dual, c0.dual(), lam, x)
        return expected, psi_R(system, c0, x, lam)
    return Case(cid, check, {"chamber": c0.word(), "x": x, "lambda": lam})


def _parity_case(cid: str, system: RootSystem) -> Case:
    def check():
        return 0, (system.n_positive + system.dim) % 2
    return Case(cid, check, {"positive_roots": system.n_positive, "dim": system.dim})


def _no_wall_case(cid: str, system: RootSystem) -> Case:
    def check():
        try:
            subsystem_wall(system, system.roots[0])
        except MathPreconditionError:
            return "MathPreconditionError", "MathPreconditionError"
        return "MathPreconditionError", "no error"
    return Case(cid, check, {"minus_one_in_W": False})


def build_cases(system: RootSystem, rng: random.Random, n: int) -> List[Case]:
    label = system.label
    if not system.minus_one_in_W():
        return [_no_wall_case(f"{label}/wall_needs_minus_one/0", system)]
    chambers = system.chambers()
    positive = system.base_chamber.positive_indices
    cases: List[Case] = [_parity_case(f"{label}/q_parity/0", system)]

    for idx in positive:
        cases.append(_wall_system_case(f"{label}/wall_system/{idx}", system, idx))
        for j in range(_POINTS_PER_WALL):
            c0 = rng.choice(chambers)
            cases.append(_x_wall_case(f"{label}/x_wall/{idx}.{j}", system, idx, c0, rng))

    for k in range(max(n, _DUALITY_CASES)):
        x = random_point(system.dim, rng, system.is_Rvee_regular)
        lam = random_point(system.dim, rng, system.is_R_regular)
        cases.append(_duality_case(f"{label}/duality/{k}", system, rng.choice(chambers), x, lam))
    return cases
