"""
Cone valuations: psi_C, phi_{C°} and the conic-function operators.

Cones are drawn at random in the dimension of the system under test (at
least 2); the closed Weyl chambers of the system are mixed in as a source of
simplicial cones.
"""
import random
from typing import List

from dscones.core.cones import (
    Cone,
    cone_from_generators,
    dual,
    euler_face_sum,
    negate,
    phi,
    phi_via_faces,
    psi,
    psi_by_definition,
    quotient_by_lineality,
)
from dscones.core.conic import (
    ConicFunction,
    conic_equal,
    conic_star,
    conic_wedge,
    psi_conic,
    relint_function,
)
from dscones.core.ratgeom import coordinates, dot, kernel_basis, neg
from dscones.core.rootsys import RootSystem
from dscones.verify.runner import Case
from dscones.verify import sampling


SUITE = "appendixA"

# conic_equal refines a hyperplane arrangement; keep those cases few and low-dimensional
_MAX_CONIC_CASES = 6
_SIMPLICIAL_CASES = 100


def _dim(system: RootSystem) -> int:
    return max(2, min(system.dim, 4))


def _conic_dim(system: RootSystem) -> int:
    return min(_dim(system), 3)


def _duality_case(cid: str, cone: Cone, x, lam) -> Case:
    def check():
        sign = (-1) ** cone.ambient_dim
        return sign * psi(cone, x, lam), psi(dual(cone), lam, x)
    return Case(cid, check, {"cone": repr(cone), "x": x, "lambda": lam})


def _reduction_case(cid: str, cone: Cone, x, lam) -> Case:
    def check():
        if not cone.in_span(x) or any(dot(lam, line) != 0 for line in cone.lineality):
            return 0, psi(cone, x, lam)
        q = quotient_by_lineality(cone)
        expected = (-1) ** cone.lineality_dim * psi(q.cone, q.point(x), q.functional(lam))
        return expected, psi(cone, x, lam)
    return Case(cid, check, {"cone": repr(cone), "x": x, "lambda": lam})


def _euler_case(cid: str, cone: Cone) -> Case:
    def check():
        expected = (-1) ** cone.dim if cone.is_subspace else 0
        return expected, euler_face_sum(cone)
    return Case(cid, check, {"cone": repr(cone)})


def _simplicial_case(cid: str, cone: Cone, x, lam) -> Case:
    def check():
        fast = (psi(cone, x, lam), phi(cone, x, lam))
        slow = (psi_by_definition(cone, x, lam), phi_via_faces(cone, x, lam))
        return slow, fast
    return Case(cid, check, {"rays": list(cone.rays), "x": x, "lambda": lam})


def _facet_wall_case(cid: str, cone: Cone, rng: random.Random) -> Case:
    n = cone.ambient_dim
    f = rng.choice(cone.facets)
    x, x_prime, y = sampling.wall_crossing(f, f, cone.facets, rng)
    lam = sampling.rational_vector(n, rng)
    basis = kernel_basis([f])
    facet = cone_from_generators([coordinates(basis, r) for r in cone.rays if dot(f, r) == 0], dim=len(basis))

    def check():
        y_wall = coordinates(basis, y)
        lam_wall = tuple(dot(lam, b) for b in basis)
        return psi(facet, y_wall, lam_wall), psi(cone, x, lam) - psi(cone, x_prime, lam)
    return Case(cid, check, {"cone": repr(cone), "facet": f, "x": x, "x_prime": x_prime, "lambda": lam})


def _ray_wall_case(cid: str, cone: Cone, rng: random.Random) -> Case:
    n = cone.ambient_dim
    omega = rng.choice(cone.rays)
    lam, lam_prime, mu = sampling.wall_crossing(omega, omega, cone.rays, rng)
    x = sampling.rational_vector(n, rng)
    basis = kernel_basis([omega])
    image = cone_from_generators([tuple(dot(z, r) for z in basis) for r in cone.rays], dim=len(basis))

    def check():
        x_tilde = tuple(dot(z, x) for z in basis)
        mu_tilde = coordinates(basis, mu)
        return -psi(image, x_tilde, mu_tilde), psi(cone, x, lam) - psi(cone, x, lam_prime)
    return Case(cid, check, {"cone": repr(cone), "omega": omega, "x": x, "lambda": lam, "lambda_prime": lam_prime})


def _subdivision_case(cid: str, cone: Cone, h, x, lam) -> Case:
    plus, minus, zero = sampling.split_cone(cone, h)

    def check():
        pieces = psi(plus, x, lam) + psi(minus, x, lam) - psi(zero, x, lam)
        return psi(cone, x, lam), pieces
    return Case(cid, check, {"cone": repr(cone), "h": h, "x": x, "lambda": lam})


def _positive_pairing_case(cid: str, cone: Cone, x, lam) -> Case:
    def check():
        return (0, 0), (psi(cone, x, lam), phi(cone, x, lam))
    return Case(cid, check, {"cone": repr(cone), "x": x, "lambda": lam})


def _relint_case(cid: str, cone: Cone, x) -> Case:
    def check():
        return int(cone.relint_contains(x)), relint_function(cone).evaluate(x)
    return Case(cid, check, {"cone": repr(cone), "x": x})


def _regular_phi_case(cid: str, cone: Cone, x, lam) -> Case:
    def check():
        return psi(cone, x, lam), phi(cone, x, lam)
    return Case(cid, check, {"cone": repr(cone), "x": x, "lambda": lam})


def _conic_relation_case(cid: str, cone: Cone, h) -> Case:
    plus, minus, zero = sampling.split_cone(cone, h)
    n = cone.ambient_dim
    relation = (ConicFunction.indicator(cone) + ConicFunction.indicator(zero)
                - ConicFunction.indicator(plus) - ConicFunction.indicator(minus))

    def check():
        nothing = ConicFunction.zero(n)
        return (True, True, True), (
            conic_equal(relation, nothing),
            conic_equal(conic_star(relation), nothing),
            conic_equal(conic_wedge(relation), nothing),
        )
    return Case(cid, check, {"cone": repr(cone), "h": h})


def _biconic_case(cid: str, cone: Cone, h, x, lam) -> Case:
    plus, minus, zero = sampling.split_cone(cone, h)
    f = ConicFunction.from_terms(cone.ambient_dim, [(1, plus), (1, minus), (-1, zero)])

    def check():
        return (psi(cone, x, lam), phi(cone, x, lam)), (psi_conic(f, x, lam), psi_conic(relint_function(cone), x, lam))
    return Case(cid, check, {"cone": repr(cone), "h": h, "x": x, "lambda": lam})


def _involution_case(cid: str, f: ConicFunction) -> Case:
    def check():
        star_star = conic_star(conic_star(f))
        four = conic_star(conic_wedge(conic_star(conic_wedge(f))))
        return (True, True), (conic_equal(star_star, f), conic_equal(four, f))
    return Case(cid, check, {"terms": [(c, repr(k)) for c, k in f.terms]})


def _wedge_relint_case(cid: str, cone: Cone) -> Case:
    n = cone.ambient_dim

    def check():
        lhs = conic_wedge(relint_function(cone))
        rhs = ((-1) ** cone.dim) * ConicFunction.indicator(negate(dual(cone)))
        faces = ConicFunction.from_terms(n, [((-1) ** f.dim, dual(f.cone)) for f in cone.faces()])
        sign = (-1) ** (n - dual(cone).dim)
        opposite = sign * relint_function(negate(dual(cone)))
        return (True, True), (conic_equal(lhs, rhs), conic_equal(faces, opposite))
    return Case(cid, check, {"cone": repr(cone)})


def build_cases(system: RootSystem, rng: random.Random, n: int) -> List[Case]:
    d = _dim(system)
    label = system.label
    cases: List[Case] = []
    chambers = system.chambers() if system.dim >= 2 else []

    for k in range(n):
        cone = sampling.mixed_cone(d, rng)
        if chambers and k % 4 == 0:
            cone = system.closed_chamber_cone(rng.choice(chambers))
        m = cone.ambient_dim
        x, lam = sampling.rational_vector(m, rng), sampling.rational_vector(m, rng)
        cases.append(_duality_case(f"{label}/duality/{k}", cone, x, lam))
        cases.append(_euler_case(f"{label}/euler_face_sum/{k}", cone))

    for k in range(n):
        cone = sampling.random_cone(d, rng, lineality=rng.random() < 0.5)
        x = sampling.point_in_cone(cone, rng) if k % 2 else sampling.rational_vector(d, rng)
        lam = sampling.rational_vector(d, rng)
        if k % 3 == 0:
            lam = sampling.point_in_cone(dual(cone), rng)
        cases.append(_reduction_case(f"{label}/lineality_reduction/{k}", cone, x, lam))

    for k in range(max(n, _SIMPLICIAL_CASES)):
        dim = 1 + k % 4
        cone = sampling.random_simplicial(dim, rng)
        x, lam = sampling.rational_vector(dim, rng), sampling.rational_vector(dim, rng)
        if k % 3 == 0:
            x = sampling.point_in_cone(cone, rng)
        cases.append(_simplicial_case(f"{label}/simplicial/{k}", cone, x, lam))

    for k in range(n):
        cone = sampling.random_full_pointed_cone(d, rng)
        cases.append(_facet_wall_case(f"{label}/facet_wall/{k}", cone, rng))
        cases.append(_ray_wall_case(f"{label}/ray_wall/{k}", cone, rng))

    for k in range(n):
        cone = sampling.random_cone(d, rng, lineality=k % 3 == 0)
        h = sampling.splitting_functional(cone, rng)
        if h is None:
            continue
        x, lam = sampling.rational_vector(d, rng), sampling.rational_vector(d, rng)
        cases.append(_subdivision_case(f"{label}/subdivision/{k}", cone, h, x, lam))
        cases.append(_biconic_case(f"{label}/biconic/{k}", cone, h, x, lam))

    for k in range(n):
        cone = sampling.mixed_cone(d, rng)
        x, lam = sampling.rational_vector(d, rng), sampling.rational_vector(d, rng)
        if dot(lam, x) == 0:
            continue
        if dot(lam, x) < 0:
            lam = neg(lam)
        cases.append(_positive_pairing_case(f"{label}/positive_pairing/{k}", cone, x, lam))

    for k in range(n):
        cone = sampling.mixed_cone(d, rng)
        x = sampling.point_in_cone(cone, rng, interior=k % 2 == 0) if k % 3 else sampling.rational_vector(d, rng)
        cases.append(_relint_case(f"{label}/relint_expansion/{k}", cone, x))

    for k in range(n):
        cone = sampling.random_full_pointed_cone(d, rng)
        x = sampling.off_walls([tuple(1 if i == j else 0 for i in range(d)) for j in range(d)], cone.facets, rng, d)
        lam = sampling.rational_vector(d, rng)
        cases.append(_regular_phi_case(f"{label}/regular_phi/{k}", cone, x, lam))

    cd = _conic_dim(system)
    for k in range(min(n, _MAX_CONIC_CASES)):
        cone = sampling.random_cone(cd, rng, max_gens=cd + 1)
        h = sampling.splitting_functional(cone, rng)
        if h is not None:
            cases.append(_conic_relation_case(f"{label}/cut_relation/{k}", cone, h))
        f = ConicFunction.from_terms(cd, [(1, cone), (rng.choice([-1, 2]), sampling.random_cone(cd, rng, max_gens=cd))])
        cases.append(_involution_case(f"{label}/involutions/{k}", f))
        cases.append(_wedge_relint_case(f"{label}/wedge_relint/{k}", cone))
    return cases
