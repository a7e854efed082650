"""
Chamber sums psi_R: W-equivariance, vanishing when -1 is not in W, the
omega-coarsening of chambers, crossing an R-hyperplane in lambda, and the
twisted sums over the coroot and root lattices.
"""
import random
from typing import List

from dscones.core.constants import (
    character_lifts,
    psi_R,
    twisted_prediction,
    twisted_sum_coroot,
    twisted_sum_root,
)
from dscones.core.ratgeom import Vector
from dscones.core.rootsys import (
    Chamber,
    RootSystem,
    coroot_on_ray,
    half_length_chambers,
    omega_bijection,
    opposite_chamber,
    random_point,
    sign_characters,
    subsystem_omega,
    subsystem_quotient,
    subsystem_two,
)
from dscones.verify.runner import Case
from dscones.verify import sampling


SUITE = "section1"

_VANISHING_CASES = 500
_POINTS_PER_CHARACTER = 20


def _regular_pair(system: RootSystem, rng: random.Random):
    x = random_point(system.dim, rng, system.is_regular)
    lam = random_point(system.dim, rng, system.is_R_regular)
    return x, lam


def _equivariance_case(cid: str, system: RootSystem, c0: Chamber, w, x, lam) -> Case:
    def check():
        moved = psi_R(system, w.act_on_chamber(c0), x, lam)
        pulled = psi_R(system, c0, w.inverse.act(x), w.inverse.act_dual(lam))
        signed = w.epsilon * psi_R(system, c0, x, lam)
        return (moved, moved), (pulled, signed)
    return Case(cid, check, {"chamber": c0.word(), "w": w.word, "x": x, "lambda": lam})


def _vanishing_case(cid: str, system: RootSystem, c0: Chamber, x, lam) -> Case:
    def check():
        return 0, psi_R(system, c0, x, lam)
    return Case(cid, check, {"chamber": c0.word(), "x": x, "lambda": lam})


def _triangle_case(cid: str, system: RootSystem, c0: Chamber, c1: Chamber, c2: Chamber) -> Case:
    def check():
        return system.epsilon(c0, c2), system.epsilon(c0, c1) * system.epsilon(c1, c2)
    return Case(cid, check, {"chambers": [c0.word(), c1.word(), c2.word()]})


def _half_sums_case(cid: str, system: RootSystem, c: Chamber, w) -> Case:
    def check():
        wc = w.act_on_chamber(c)
        r_c = {system.roots[i] for i in subsystem_two(system, c).indices}
        r_wc = {system.roots[i] for i in subsystem_two(system, wc).indices}
        expected = (system.delta(wc), system.rho(wc), r_wc)
        return expected, (w.act(system.delta(c)), w.act_dual(system.rho(c)), {w.act_dual(r) for r in r_c})
    return Case(cid, check, {"chamber": c.word(), "w": w.word})


def _regular_implies_case(cid: str, system: RootSystem, lam) -> Case:
    def check():
        return True, system.dual().is_regular(lam)
    return Case(cid, check, {"lambda": lam})


def _bijection_case(cid: str, system: RootSystem, omega: Vector) -> Case:
    def check():
        bijection = omega_bijection(system, omega)
        sub = subsystem_omega(system, omega).system
        onto = set(bijection.values()) == set(sub.chambers()) and len(bijection) == len(sub.chambers())
        preserved = all(
            system.length(a, b) == sub.length(bijection[a], bijection[b]) for a in bijection for b in bijection
        )
        return (True, True), (onto, preserved)
    return Case(cid, check, {"omega": omega})


def _parity_case(cid: str, system: RootSystem, omega: Vector, expected_odd: bool) -> Case:
    def check():
        drop = system.n_positive - subsystem_omega(system, omega).system.n_positive
        return expected_odd, drop % 2 == 1
    return Case(cid, check, {"omega": omega, "coroot_on_ray": expected_odd})


def _opposite_case(cid: str, system: RootSystem, omega: Vector, c0: Chamber) -> Case:
    def check():
        drop = system.n_positive - subsystem_omega(system, omega).system.n_positive
        return drop, system.length(c0, opposite_chamber(system, omega, c0))
    return Case(cid, check, {"omega": omega, "chamber": c0.word()})


def _half_length_case(cid: str, system: RootSystem, omega: Vector, c0: Chamber) -> Case:
    def check():
        drop = system.n_positive - subsystem_omega(system, omega).system.n_positive
        found = half_length_chambers(system, omega, c0)
        lengths = sorted({system.length(c0, c) for c in found})
        return [(drop - 1) // 2], lengths
    return Case(cid, check, {"omega": omega, "chamber": c0.word()})


def _lambda_wall_case(cid: str, system: RootSystem, omega: Vector, c0: Chamber, x, lam, lam_prime, mu) -> Case:
    has_coroot = coroot_on_ray(system, omega) is not None

    def check():
        jump = psi_R(system, c0, x, lam) - psi_R(system, c0, x, lam_prime)
        if not has_coroot:
            return (0, 0), (jump, jump)
        quot = subsystem_quotient(system, omega, c0)
        via_quotient = -2 * psi_R(quot.system, quot.chamber(c0), quot.point(x), quot.functional(mu))
        ambient = subsystem_omega(system, omega, c0)
        via_ambient = 2 * psi_R(ambient.system, ambient.chamber(c0), x, mu)
        return (via_quotient, via_ambient), (jump, jump)
    return Case(cid, check, {"omega": omega, "chamber": c0.word(), "x": x, "lambda": lam, "lambda_prime": lam_prime})


def _twisted_case(cid: str, system: RootSystem, c0: Chamber, chi, lattice: str, x, lam) -> Case:
    summed = twisted_sum_coroot if lattice == "coroot" else twisted_sum_root

    def check():
        got = summed(system, c0, chi, x, lam)
        if not character_lifts(system, chi, lattice):
            return 0, got
        return twisted_prediction(system, c0, chi, lattice, x, lam), got
    return Case(cid, check, {"lattice": lattice, "chi": list(chi.values), "chamber": c0.word(), "x": x, "lambda": lam})


def _omega_cases(system: RootSystem, rng: random.Random, n: int) -> List[Case]:
    label = system.label
    cases: List[Case] = []
    rays = system.coweight_rays()
    for k, omega in enumerate(rays):
        closure = [c for c in system.chambers() if c.closure_contains(omega)]
        c0 = rng.choice(closure)
        cases.append(_bijection_case(f"{label}/omega_bijection/{k}", system, omega))
        has_coroot = coroot_on_ray(system, omega) is not None
        if has_coroot or subsystem_quotient(system, omega).system.minus_one_in_W():
            cases.append(_parity_case(f"{label}/omega_parity/{k}", system, omega, has_coroot))
        if system.minus_one_in_W():
            cases.append(_opposite_case(f"{label}/opposite_length/{k}", system, omega, c0))
        if has_coroot:
            cases.append(_half_length_case(f"{label}/half_length/{k}", system, omega, c0))
        for j in range(max(1, n // len(rays))):
            x = random_point(system.dim, rng, system.is_regular)
            lam, lam_prime, mu = sampling.wall_crossing(omega, omega, rays, rng)
            cases.append(_lambda_wall_case(f"{label}/lambda_wall/{k}.{j}", system, omega, c0, x, lam, lam_prime, mu))
    return cases


def build_cases(system: RootSystem, rng: random.Random, n: int) -> List[Case]:
    label = system.label
    chambers = system.chambers()
    group = system.weyl_group()
    cases: List[Case] = []

    for k in range(n):
        x, lam = _regular_pair(system, rng)
        c0 = rng.choice(chambers)
        if system.minus_one_in_W():
            cases.append(_equivariance_case(f"{label}/equivariance/{k}", system, c0, rng.choice(group), x, lam))
        c1, c2 = rng.choice(chambers), rng.choice(chambers)
        cases.append(_triangle_case(f"{label}/epsilon_triangle/{k}", system, c0, c1, c2))
        cases.append(_half_sums_case(f"{label}/half_sums/{k}", system, c1, rng.choice(group)))
        if system.minus_one_in_W():
            cases.append(_regular_implies_case(f"{label}/r_regular_is_regular/{k}", system, lam))

    if not system.minus_one_in_W():
        for k in range(max(n, _VANISHING_CASES)):
            x, lam = _regular_pair(system, rng)
            cases.append(_vanishing_case(f"{label}/vanishing/{k}", system, rng.choice(chambers), x, lam))

    if system.spans:
        cases.extend(_omega_cases(system, rng, n))

    for lattice in ("coroot", "root"):
        characters = sign_characters(system, lattice)
        for k in range(max(n, _POINTS_PER_CHARACTER * len(characters))):
            chi = characters[k % len(characters)]
            x, lam = _regular_pair(system, rng)
            c0 = rng.choice(chambers)
            cases.append(_twisted_case(f"{label}/twisted_{lattice}/{k}", system, c0, chi, lattice, x, lam))
    return cases
