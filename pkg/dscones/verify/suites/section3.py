"""
m_R against the cbar recursion oracle, the d-table symmetries and the golden
tables on disk.

Small systems are covered exhaustively: one deep point per Weyl chamber
against one jittered point per R-chamber.
"""
import random
from typing import List

from dscones.core.conic import arrangement_samples
from dscones.core.constants import cbar, cbar_table, d_table, d_vee_table, m_R
from dscones.core.ratgeom import dot
from dscones.core.rootsys import RootSystem, generic_point, random_point, subsystem_wall
from dscones.utils.errors import DsConesError, MathPreconditionError
from dscones.utils.helpers import get_logger
from dscones.verify.golden import diff_golden, load_golden
from dscones.verify.runner import Case
from dscones.verify import sampling


logger = get_logger(__name__)

SUITE = "section3"

_EXHAUSTIVE_CHAMBERS = 12
_SAMPLED_PAIRS = 200


def _stable_case(cid: str, system: RootSystem, x, lam) -> Case:
    def check():
        return cbar(system, x, lam), m_R(system, x, lam)
    return Case(cid, check, {"x": x, "lambda": lam})


def _positive_pairing_case(cid: str, system: RootSystem, x, lam) -> Case:
    def check():
        return 0, m_R(system, x, lam)
    return Case(cid, check, {"x": x, "lambda": lam})


def _invariance_case(cid: str, system: RootSystem, w, x, lam) -> Case:
    def check():
        moved = (m_R(system, w.act(x), w.act_dual(lam)), cbar(system, w.act(x), w.act_dual(lam)))
        return (m_R(system, x, lam), cbar(system, x, lam)), moved
    return Case(cid, check, {"w": w.word, "x": x, "lambda": lam})


def _wall_relation_case(cid: str, system: RootSystem, idx: int, rng: random.Random, lam) -> Case:
    alpha = system.roots[idx]
    wall = subsystem_wall(system, alpha)
    x, x_prime, y = sampling.wall_crossing(alpha, system.coroots[idx], system.roots, rng,
                                           accept=lambda v: wall.system.is_regular(wall.point(v)))

    def check():
        expected = 2 * cbar(wall.system, wall.point(y), wall.functional(lam))
        return expected, m_R(system, x, lam) + m_R(system, x_prime, lam)
    return Case(cid, check, {"alpha": alpha, "x": x, "x_prime": x_prime, "lambda": lam})


def _path_case(cid: str, system: RootSystem, lam, seed: int) -> Case:
    def check():
        return cbar_table(system, lam), cbar_table(system, lam, rng=random.Random(seed))
    return Case(cid, check, {"lambda": lam, "walk_seed": seed})


def _d_symmetry_case(cid: str, system: RootSystem, seed: int) -> Case:
    def check():
        table = d_table(system, seed=seed)
        sign = (-1) ** system.q_invariant()
        inverse = {w.word: table.values[w.inverse] for w in table.values}
        predicted = {w.word: sign * w.epsilon * v for w, v in table.values.items()}
        return (table.by_word(), predicted), (d_vee_table(system, seed=seed).by_word(), inverse)
    return Case(cid, check, {"seed": seed})


def _golden_case(cid: str, system: RootSystem, golden) -> Case:
    def check():
        return {}, diff_golden(golden, d_table(system).by_word())
    return Case(cid, check, {"golden": system.label})


def _no_constant_case(cid: str, system: RootSystem, x, lam) -> Case:
    def check():
        try:
            cbar(system, x, lam)
        except MathPreconditionError:
            return "MathPreconditionError", "MathPreconditionError"
        return "MathPreconditionError", "no error"
    return Case(cid, check, {"x": x, "lambda": lam})


def _draw_lambda(system: RootSystem, rng: random.Random):
    return random_point(system.dim, rng, lambda v: sampling.is_generic_functional(system, v))


def _lambda_samples(system: RootSystem, rng: random.Random, attempts: int = 50) -> List:
    """One jittered generic point in every R-chamber."""
    rays = system.coweight_rays()
    centers = [p for p in arrangement_samples(rays, system.dim) if system.is_R_regular(p)]
    result = []
    for p in centers:
        for _ in range(attempts):
            lam = sampling.jitter_within(p, rays, rng)
            if sampling.is_generic_functional(system, lam):
                break
        else:
            raise DsConesError(f"could not draw a generic functional near {[str(c) for c in p]}")
        result.append(lam)
    return result


def build_cases(system: RootSystem, rng: random.Random, n: int) -> List[Case]:
    label = system.label
    if not system.minus_one_in_W():
        x = random_point(system.dim, rng, system.is_regular)
        lam = _draw_lambda(system, rng)
        return [_no_constant_case(f"{label}/needs_minus_one/0", system, x, lam)]

    chambers = system.chambers()
    group = system.weyl_group()
    cases: List[Case] = []

    if len(chambers) <= _EXHAUSTIVE_CHAMBERS:
        lambdas = _lambda_samples(system, rng)
        k = 0
        for c in chambers:
            x = generic_point(system, c, rng)
            for lam in lambdas:
                cases.append(_stable_case(f"{label}/m_equals_cbar/{k}", system, x, lam))
                k += 1
    else:
        lambdas = []
        for k in range(max(n, _SAMPLED_PAIRS)):
            x = random_point(system.dim, rng, system.is_regular)
            lam = _draw_lambda(system, rng)
            lambdas.append(lam)
            cases.append(_stable_case(f"{label}/m_equals_cbar/{k}", system, x, lam))

    for k in range(n):
        x = random_point(system.dim, rng, system.is_regular)
        lam = _draw_lambda(system, rng)
        if dot(lam, x) > 0:
            cases.append(_positive_pairing_case(f"{label}/positive_pairing/{k}", system, x, lam))
        cases.append(_invariance_case(f"{label}/w_invariance/{k}", system, rng.choice(group), x, lam))

    for idx in system.base_chamber.positive_indices:
        lam = rng.choice(lambdas)
        cases.append(_wall_relation_case(f"{label}/wall_relation/{idx}", system, idx, rng, lam))

    for k, lam in enumerate(lambdas[:n]):
        cases.append(_path_case(f"{label}/path_independence/{k}", system, lam, rng.randrange(2 ** 32)))

    cases.append(_d_symmetry_case(f"{label}/d_symmetry/0", system, rng.randrange(2 ** 32)))

    golden = load_golden(label)
    if golden is None:
        logger.warning("No golden table for %s; skipping the golden comparison", label)
    else:
        cases.append(_golden_case(f"{label}/golden/0", system, golden))
    return cases
