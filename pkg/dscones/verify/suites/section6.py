"""
Individual constants b_R(tau, C; x, lambda): vanishing, equivariance,
independence of the chamber inside its R_C class, constancy in x on a Weyl
chamber, and the wall relation through b_sub.

For systems with at most _EXHAUSTIVE_CHAMBERS chambers every pair
(C, lambda) with lambda in W.tau is covered; larger systems draw n pairs.
"""
import random
from fractions import Fraction
from typing import List, Tuple

from dscones.core.constants import (
    BQuery,
    b_constant,
    b_sub,
    b_sub_via_wall_constant,
    compact_chambers,
    knapp_c,
)
from dscones.core.ratgeom import Vector, dot, scale, vsum
from dscones.core.rootsys import (
    Chamber,
    RootSystem,
    empty_system,
    generic_functional,
    random_point,
    subsystem_two,
    subsystem_wall,
)
from dscones.utils.errors import DsConesError, MathPreconditionError
from dscones.verify.runner import Case
from dscones.verify import sampling


SUITE = "section6"

_EXHAUSTIVE_CHAMBERS = 8
_SAMPLED_INSTANCES = 100


def _b(chamber: Chamber, tau, x, lam) -> int:
    return b_constant(BQuery(chamber, tau, x, lam))


def _inputs(chamber: Chamber, tau, x, lam) -> dict:
    return {"chamber": chamber.word(), "tau": tau, "x": x, "lambda": lam}


def _vanishing_case(cid: str, system: RootSystem, chamber: Chamber, tau, x, lam) -> Case:
    def check():
        return 0, _b(chamber, tau, x, lam)
    return Case(cid, check, _inputs(chamber, tau, x, lam))


def _empty_case(cid: str) -> Case:
    def check():
        empty = empty_system(0)
        return 1, b_constant(BQuery(empty.base_chamber, (), (), ()))
    return Case(cid, check, {"system": "empty"})


def _compact_class_case(cid: str, system: RootSystem, chamber: Chamber, tau, x, lam) -> Case:
    def check():
        r_c = [system.roots[i] for i in subsystem_two(system, chamber).indices]
        value = _b(chamber, tau, x, lam)
        others = [_b(c, tau, x, lam) for c in compact_chambers(system, r_c)]
        return [value] * len(others), others
    return Case(cid, check, _inputs(chamber, tau, x, lam))


def _tau_chamber_case(cid: str, system: RootSystem, chamber: Chamber, tau, x, lam, w) -> Case:
    def check():
        return _b(chamber, tau, x, lam), _b(w.act_on_chamber(chamber), w.act_dual(tau), x, lam)
    return Case(cid, check, dict(_inputs(chamber, tau, x, lam), w=w.word))


def _point_case(cid: str, system: RootSystem, chamber: Chamber, tau, x, lam, w) -> Case:
    def check():
        return _b(chamber, tau, x, lam), _b(chamber, tau, w.act(x), w.act_dual(lam))
    return Case(cid, check, dict(_inputs(chamber, tau, x, lam), w=w.word))


def _constancy_case(cid: str, system: RootSystem, chamber: Chamber, tau, x, x_other, lam) -> Case:
    def check():
        return _b(chamber, tau, x, lam), _b(chamber, tau, x_other, lam)
    return Case(cid, check, dict(_inputs(chamber, tau, x, lam), x_other=x_other))


def _wall_case(cid: str, system: RootSystem, chamber: Chamber, idx: int, tau, lam, rng: random.Random) -> Case:
    alpha = system.roots[idx]
    wall = subsystem_wall(system, alpha, chamber)
    normals = list(system.roots) + list(system.weight_rays())
    x, x_prime, y = sampling.wall_crossing(
        alpha, system.coroots[idx], normals, rng,
        accept=lambda v: wall.system.is_Rvee_regular(wall.point(v)),
    )
    reflected = system.reflect_functional(lam, idx)

    def check():
        crossing = _b(chamber, tau, x, lam) + _b(chamber, tau, x_prime, lam)
        subs = b_sub(system, tau, chamber, alpha, y, lam) + b_sub(system, tau, chamber, alpha, y, reflected)
        return subs, crossing
    return Case(cid, check, dict(_inputs(chamber, tau, x, lam), alpha=alpha, x_prime=x_prime, y=y))


def _sub_routes_case(cid: str, system: RootSystem, chamber: Chamber, idx: int, tau, lam, rng: random.Random) -> Case:
    alpha = system.roots[idx]
    wall = subsystem_wall(system, alpha, chamber)
    normals = list(system.roots) + list(system.weight_rays())
    _, _, y = sampling.wall_crossing(
        alpha, system.coroots[idx], normals, rng,
        accept=lambda v: wall.system.is_Rvee_regular(wall.point(v)),
    )

    def check():
        return (b_sub(system, tau, chamber, alpha, y, lam),
                b_sub_via_wall_constant(system, tau, chamber, alpha, y, lam))
    return Case(cid, check, {"chamber": chamber.word(), "alpha": alpha, "tau": tau, "y": y, "lambda": lam})


def _knapp_case(cid: str, system: RootSystem, chamber: Chamber, tau, seed: int) -> Case:
    def check():
        r_c = [system.roots[i] for i in subsystem_two(system, chamber).indices]
        return 0, knapp_c(system, r_c, system.identity_element, tau, system.base_chamber, seed=seed)
    return Case(cid, check, {"chamber": chamber.word(), "tau": tau})


def _no_constant_case(cid: str, system: RootSystem, chamber: Chamber, tau, x) -> Case:
    def check():
        try:
            _b(chamber, tau, x, tau)
        except MathPreconditionError:
            return "MathPreconditionError", "MathPreconditionError"
        return "MathPreconditionError", "no error"
    return Case(cid, check, _inputs(chamber, tau, x, tau))


def _same_chamber_point(system: RootSystem, x: Vector, rng: random.Random, attempts: int = 200) -> Vector:
    """Another R^vee-regular point of the Weyl chamber of x, usually across an R^vee-wall."""
    rays = system.fundamental_coweights(system.chamber_of(x))
    for _ in range(attempts):
        candidate = vsum((scale(Fraction(rng.randint(1, 40), rng.randint(1, 7)), r) for r in rays), system.dim)
        if system.is_Rvee_regular(candidate):
            return candidate
    raise DsConesError(f"could not draw a second point in a chamber of {system.label}")


def _instances(system: RootSystem, orbit: List[Vector], rng: random.Random, n: int) -> List[Tuple[Chamber, Vector]]:
    chambers = system.chambers()
    if len(chambers) <= _EXHAUSTIVE_CHAMBERS:
        return [(c, lam) for c in chambers for lam in orbit]
    return [(rng.choice(chambers), rng.choice(orbit)) for _ in range(max(n, _SAMPLED_INSTANCES))]


def build_cases(system: RootSystem, rng: random.Random, n: int) -> List[Case]:
    label = system.label
    base = system.base_chamber
    tau = generic_functional(system, base, rng)
    if not system.minus_one_in_W():
        x = random_point(system.dim, rng, system.is_Rvee_regular)
        return [_no_constant_case(f"{label}/needs_minus_one/0", system, base, tau, x)]

    group = system.weyl_group()
    orbit = sorted({w.act_dual(tau) for w in group})
    cases: List[Case] = [_empty_case(f"{label}/empty_system/0")]

    for k, (chamber, lam) in enumerate(_instances(system, orbit, rng, n)):
        x = random_point(system.dim, rng, system.is_Rvee_regular)
        coweights = system.fundamental_coweights(system.chamber_of(x))
        if any(dot(lam, omega) > 0 for omega in coweights):
            cases.append(_vanishing_case(f"{label}/vanishing/{k}", system, chamber, tau, x, lam))
        cases.append(_compact_class_case(f"{label}/compact_class/{k}", system, chamber, tau, x, lam))
        cases.append(_tau_chamber_case(f"{label}/tau_chamber_equivariance/{k}", system, chamber, tau, x, lam,
                                       rng.choice(group)))
        cases.append(_point_case(f"{label}/point_equivariance/{k}", system, chamber, tau, x, lam, rng.choice(group)))
        x_other = _same_chamber_point(system, x, rng)
        cases.append(_constancy_case(f"{label}/chamber_constancy/{k}", system, chamber, tau, x, x_other, lam))
        for idx in chamber.positive_indices:
            if not chamber.dual().closure_contains(system.roots[idx]):
                continue
            cases.append(_wall_case(f"{label}/wall_relation/{k}.{idx}", system, chamber, idx, tau, lam, rng))
            cases.append(_sub_routes_case(f"{label}/wall_constant_routes/{k}.{idx}", system, chamber, idx, tau,
                                          lam, rng))

    for k, chamber in enumerate(system.chambers()[:n]):
        cases.append(_knapp_case(f"{label}/knapp_identity/{k}", system, chamber, tau, rng.randrange(2 ** 32)))
    return cases
