"""
Closed convex polyhedral cones with exact V/H descriptions.

A Cone stores both descriptions in canonical form:

- lineality: RREF basis of the lineality space;
- rays: extreme rays modulo lineality, projected to its orthogonal
  complement, primitive and sorted;
- equations: RREF basis of the annihilator of span(C);
- facets: facet normals projected into span(C), primitive and sorted.

Conversions between the two descriptions go through PPL.

Two cones are equal iff their canonical data agree. The dual cone swaps the
two descriptions, so dual(dual(C)) is C itself.

The valuations psi_C and phi_{C°} are evaluated from the face lattice:
    psi_C(x, lam) = sum_F (-1)^dim F [x in C + span F] [lam in F*]
and phi replaces C + span F by its relative interior. Full-dimensional
simplicial cones take the index-set shortcut (psi_simplicial).
"""
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import ppl

from dscones.core.ratgeom import (
    Matrix,
    Vector,
    check_gram,
    complement_basis,
    coordinates,
    dot,
    inverse,
    is_zero,
    mat_vec,
    neg,
    primitive,
    project,
    rank,
    span_basis,
    sub,
    vec,
)
from dscones.utils.errors import DimensionMismatchError, DsConesError, PreconditionError


##> ============================================================================
##> DOUBLE DESCRIPTION
##> ============================================================================

def _orthogonal_part(v: Vector, basis: Sequence[Vector]) -> Vector:
    return sub(v, project(v, basis)) if basis else v


def _normalize_rays(rays: Sequence[Vector], lineality: Sequence[Vector]) -> List[Vector]:
    seen = set()
    result = []
    for r in rays:
        p = primitive(_orthogonal_part(r, lineality))
        if is_zero(p) or p in seen:
            continue
        seen.add(p)
        result.append(p)
    return sorted(result)


def _linear_expression(a: Vector) -> "ppl.Linear_Expression":
    """PPL needs integer rows; a positive rescaling leaves a.y >= 0 unchanged."""
    return ppl.Linear_Expression([int(c) for c in primitive(a)], 0)


def double_description(constraints: Sequence[Vector], n: int) -> Tuple[List[Vector], List[Vector]]:
    """
    Generators of P = {y : a.y >= 0 for every constraint a}, converted by PPL.

    Returns:
        (lineality basis, extreme rays modulo lineality)
    """
    for a in constraints:
        if len(a) != n:
            raise DimensionMismatchError(f"constraint of dimension {len(a)} in ambient dimension {n}")
    if n == 0:
        return [], []
    polyhedron = ppl.C_Polyhedron(n)
    for a in constraints:
        if not is_zero(a):
            polyhedron.add_constraint(ppl.Constraint(_linear_expression(a) >= 0))
    lines: List[Vector] = []
    rays: List[Vector] = []
    for gen in polyhedron.minimized_generators():
        coefficients = tuple(Fraction(int(c)) for c in gen.coefficients())
        if gen.is_line():
            lines.append(coefficients)
        elif gen.is_ray():
            rays.append(coefficients)
    lineality = span_basis(lines, n)
    return lineality, _normalize_rays(rays, lineality)


##> ============================================================================
##> CONE
##> ============================================================================

@dataclass(frozen=True)
class Face:
    """A face of `parent`: the rays it contains and the facets vanishing on it."""
    parent: "Cone"
    active: FrozenSet[int]
    ray_indices: FrozenSet[int]
    dim: int

    @property
    def rays(self) -> List[Vector]:
        return [self.parent.rays[j] for j in sorted(self.ray_indices)]

    @property
    def span_basis(self) -> List[Vector]:
        return span_basis(list(self.parent.lineality) + self.rays, self.parent.ambient_dim)

    @property
    def cone(self) -> "Cone":
        return self.parent._face_cone(self)

    @property
    def perp_dim(self) -> int:
        return self.parent.ambient_dim - self.dim

    def relint_contains(self, x: Vector) -> bool:
        """x in the relative interior of F: in span C and strict on every facet not containing F."""
        c = self.parent
        if not c.in_span(x):
            return False
        if any(dot(c.facets[i], x) != 0 for i in self.active):
            return False
        return all(dot(c.facets[i], x) > 0 for i in range(len(c.facets)) if i not in self.active)

    def dual_contains(self, lam: Vector) -> bool:
        """lam in F*."""
        c = self.parent
        return all(dot(lam, l) == 0 for l in c.lineality) and all(
            dot(lam, c.rays[j]) >= 0 for j in self.ray_indices
        )

    def in_cone_plus_span(self, x: Vector, strict: bool = False) -> bool:
        """x in C + span(F) (or its relative interior when strict)."""
        c = self.parent
        if not c.in_span(x):
            return False
        if strict:
            return all(dot(c.facets[i], x) > 0 for i in self.active)
        return all(dot(c.facets[i], x) >= 0 for i in self.active)


class Cone:
    """Closed convex polyhedral cone in a space of dimension ambient_dim."""

    def __init__(self, ambient_dim: int, lineality, rays, equations, facets, verify: bool = True):
        self.ambient_dim = ambient_dim
        self.lineality: Tuple[Vector, ...] = tuple(span_basis(list(lineality), ambient_dim))
        self.rays: Tuple[Vector, ...] = tuple(_normalize_rays(list(rays), self.lineality))
        self.equations: Tuple[Vector, ...] = tuple(span_basis(list(equations), ambient_dim))
        self.facets: Tuple[Vector, ...] = tuple(_normalize_rays(list(facets), self.equations))
        self._lock = threading.Lock()
        self._faces: Optional[List[Face]] = None
        self._face_cones: Dict[FrozenSet[int], "Cone"] = {}
        self._pairs: Optional[Tuple[Tuple[Vector, ...], Tuple[Vector, ...]]] = None
        if verify:
            self._verify()

    def _verify(self) -> None:
        for g in self.generators:
            if any(dot(e, g) != 0 for e in self.equations) or any(dot(f, g) < 0 for f in self.facets):
                raise DsConesError("V- and H-descriptions disagree")
        if self.span_dim != self.lineality_dim + (rank(self.rays) if self.rays else 0):
            raise DsConesError("cone dimension bookkeeping is inconsistent")

    ##> ------------------------------------------------------------------------
    ##> descriptions
    ##> ------------------------------------------------------------------------

    @property
    def generators(self) -> List[Vector]:
        return list(self.rays) + list(self.lineality) + [neg(l) for l in self.lineality]

    @property
    def inequalities(self) -> List[Vector]:
        return list(self.facets) + list(self.equations) + [neg(e) for e in self.equations]

    @property
    def lineality_dim(self) -> int:
        return len(self.lineality)

    @property
    def span_dim(self) -> int:
        return self.ambient_dim - len(self.equations)

    @property
    def dim(self) -> int:
        return self.span_dim

    @property
    def is_subspace(self) -> bool:
        return not self.rays

    @property
    def is_simplicial_full(self) -> bool:
        return not self.lineality and not self.equations and len(self.rays) == self.ambient_dim

    def key(self):
        return (self.ambient_dim, self.lineality, self.rays)

    def __eq__(self, other) -> bool:
        return isinstance(other, Cone) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Cone(dim={self.dim}/{self.ambient_dim}, rays={len(self.rays)}, lineality={self.lineality_dim})"

    ##> ------------------------------------------------------------------------
    ##> membership
    ##> ------------------------------------------------------------------------

    def _check_point(self, x: Sequence) -> None:
        if len(x) != self.ambient_dim:
            raise DimensionMismatchError(f"point of dimension {len(x)} for cone in dimension {self.ambient_dim}")

    def in_span(self, x: Vector) -> bool:
        return all(dot(e, x) == 0 for e in self.equations)

    def contains(self, x: Vector) -> bool:
        self._check_point(x)
        return self.in_span(x) and all(dot(f, x) >= 0 for f in self.facets)

    def relint_contains(self, x: Vector) -> bool:
        self._check_point(x)
        return self.in_span(x) and all(dot(f, x) > 0 for f in self.facets)

    ##> ------------------------------------------------------------------------
    ##> faces
    ##> ------------------------------------------------------------------------

    def faces(self) -> List[Face]:
        """All faces, from the lineality space up to C itself; cached."""
        with self._lock:
            if self._faces is None:
                self._faces = self._compute_faces()
            return self._faces

    def _compute_faces(self) -> List[Face]:
        n_rays = len(self.rays)
        incidence = [
            frozenset(j for j, r in enumerate(self.rays) if dot(f, r) == 0) for f in self.facets
        ]
        everything = frozenset(range(n_rays))

        def closure(ray_set: FrozenSet[int]) -> Tuple[FrozenSet[int], FrozenSet[int]]:
            active = frozenset(i for i, inc in enumerate(incidence) if ray_set <= inc)
            closed = everything
            for i in active:
                closed &= incidence[i]
            return closed, active

        found: Dict[FrozenSet[int], FrozenSet[int]] = {}
        queue = [closure(everything)]
        while queue:
            rays, active = queue.pop()
            if rays in found:
                continue
            found[rays] = active
            for i in range(len(self.facets)):
                if i not in active:
                    queue.append(closure(rays & incidence[i]))
        faces = []
        for rays, active in found.items():
            ray_vectors = [self.rays[j] for j in rays]
            dim = self.lineality_dim + (rank(ray_vectors) if ray_vectors else 0)
            faces.append(Face(parent=self, active=active, ray_indices=rays, dim=dim))
        return sorted(faces, key=lambda f: (f.dim, sorted(f.ray_indices)))

    def _face_cone(self, face: Face) -> "Cone":
        with self._lock:
            cached = self._face_cones.get(face.ray_indices)
        if cached is None:
            cached = cone_from_generators(
                [self.rays[j] for j in sorted(face.ray_indices)] + list(self.lineality)
                + [neg(l) for l in self.lineality],
                dim=self.ambient_dim,
            )
            with self._lock:
                self._face_cones[face.ray_indices] = cached
        return cached

    def simplicial_pairs(self) -> Tuple[Tuple[Vector, ...], Tuple[Vector, ...]]:
        """(rays, facets) with facets[i] the facet normal not vanishing on rays[i]."""
        if not self.is_simplicial_full:
            raise PreconditionError("cone is not simplicial of full dimension")
        with self._lock:
            if self._pairs is None:
                facets = []
                for r in self.rays:
                    facets.append(next(f for f in self.facets if dot(f, r) != 0))
                self._pairs = (self.rays, tuple(facets))
            return self._pairs


##> ============================================================================
##> CONSTRUCTION
##> ============================================================================

def _infer_dim(vectors: Sequence[Sequence], dim: Optional[int]) -> int:
    if dim is None:
        if not vectors:
            raise DimensionMismatchError("cannot infer the ambient dimension of an empty generator list")
        dim = len(vectors[0])
    if any(len(v) != dim for v in vectors):
        raise DimensionMismatchError("generators do not share a dimension")
    return dim


def cone_from_generators(gens: Sequence[Sequence], dim: Optional[int] = None) -> Cone:
    """Cone of non-negative combinations of gens (dim is needed when gens is empty)."""
    gens = [vec(g) for g in gens]
    n = _infer_dim(gens, dim)
    dual_lineality, dual_rays = double_description(gens, n)
    lineality, rays = double_description(
        list(dual_rays) + list(dual_lineality) + [neg(e) for e in dual_lineality], n
    )
    return Cone(n, lineality, rays, dual_lineality, dual_rays)


def cone_from_inequalities(
    inequalities: Sequence[Sequence], equations: Sequence[Sequence] = (), dim: Optional[int] = None
) -> Cone:
    """Cone {x : a.x >= 0 for inequalities, e.x = 0 for equations}."""
    inequalities = [vec(a) for a in inequalities]
    equations = [vec(e) for e in equations]
    n = _infer_dim(inequalities + equations, dim)
    constraints = inequalities + equations + [neg(e) for e in equations]
    lineality, rays = double_description(constraints, n)
    dual_lineality, dual_rays = double_description(
        list(rays) + list(lineality) + [neg(l) for l in lineality], n
    )
    return Cone(n, lineality, rays, dual_lineality, dual_rays)


def dual(c: Cone) -> Cone:
    """C* in the dual space; the descriptions swap roles."""
    return Cone(c.ambient_dim, c.equations, c.facets, c.lineality, c.rays, verify=False)


def subspace(basis: Sequence[Sequence], dim: int) -> Cone:
    basis = [vec(b) for b in basis]
    return cone_from_generators(basis + [neg(b) for b in basis], dim=dim)


def cone_sum(*cones: Cone) -> Cone:
    dim = cones[0].ambient_dim
    gens: List[Vector] = []
    for c in cones:
        gens.extend(c.generators)
    return cone_from_generators(gens, dim=dim)


def cone_plus_span(c: Cone, face: Face) -> Cone:
    basis = face.span_basis
    return cone_from_generators(c.generators + basis + [neg(b) for b in basis], dim=c.ambient_dim)


def negate(c: Cone) -> Cone:
    return Cone(c.ambient_dim, c.lineality, [neg(r) for r in c.rays], c.equations,
                [neg(f) for f in c.facets], verify=False)


def linear_image(c: Cone, matrix: Matrix) -> Cone:
    """Image of C under an invertible linear map of the ambient space."""
    return cone_from_generators([mat_vec(matrix, g) for g in c.generators], dim=len(matrix))


##> ============================================================================
##> VALUATIONS
##> ============================================================================

def _check_pair(c: Cone, x: Sequence, lam: Sequence) -> None:
    if len(x) != c.ambient_dim or len(lam) != c.ambient_dim:
        raise DimensionMismatchError(
            f"x has dimension {len(x)}, lambda {len(lam)}, cone {c.ambient_dim}"
        )


def psi_simplicial(rays: Sequence[Vector], facets: Sequence[Vector], x: Vector, lam: Vector,
                   strict: bool = False) -> int:
    """
    Index-set evaluation for a full-dimensional simplicial cone.

    facets[i] must vanish on every ray except rays[i]. The value is 0 unless
    I_x = {i : x_i >= 0} (x_i > 0 when strict) and I_lam = {i : lam(r_i) >= 0}
    are complementary, and (-1)^|I_lam| otherwise.
    """
    count = 0
    for r, f in zip(rays, facets):
        xf = dot(f, x)
        in_x = xf > 0 if strict else xf >= 0
        in_lam = dot(lam, r) >= 0
        if in_x == in_lam:
            return 0
        count += in_lam
    return -1 if count % 2 else 1


def psi(c: Cone, x: Sequence, lam: Sequence) -> int:
    """psi_C(x, lam) from the face sum, with the simplicial shortcut."""
    _check_pair(c, x, lam)
    x, lam = vec(x), vec(lam)
    if c.is_simplicial_full:
        rays, facets = c.simplicial_pairs()
        return psi_simplicial(rays, facets, x, lam)
    return _face_sum(c, x, lam, strict=False)


def phi(c: Cone, x: Sequence, lam: Sequence) -> int:
    """phi_{C°}(x, lam): the face sum with C + span F replaced by its relative interior."""
    _check_pair(c, x, lam)
    x, lam = vec(x), vec(lam)
    if c.is_simplicial_full:
        rays, facets = c.simplicial_pairs()
        return psi_simplicial(rays, facets, x, lam, strict=True)
    return _face_sum(c, x, lam, strict=True)


def _face_sum(c: Cone, x: Vector, lam: Vector, strict: bool) -> int:
    if not c.in_span(x):
        return 0
    total = 0
    for face in c.faces():
        if face.in_cone_plus_span(x, strict=strict) and face.dual_contains(lam):
            total += -1 if face.dim % 2 else 1
    return total


def psi_by_definition(c: Cone, x: Sequence, lam: Sequence) -> int:
    """The face sum without the simplicial shortcut."""
    _check_pair(c, x, lam)
    return _face_sum(c, vec(x), vec(lam), strict=False)


def phi_via_faces(c: Cone, x: Sequence, lam: Sequence) -> int:
    """phi_{C°} = sum over faces G of (-1)^(dim C - dim G) psi_G."""
    _check_pair(c, x, lam)
    total = 0
    for face in c.faces():
        sign = -1 if (c.dim - face.dim) % 2 else 1
        total += sign * psi(face.cone, x, lam)
    return total


def euler_face_sum(c: Cone) -> int:
    return sum(-1 if f.dim % 2 else 1 for f in c.faces())


@dataclass(frozen=True)
class Quotient:
    """Coordinates on span(C)/lineality(C)."""
    cone: Cone
    complement: Tuple[Vector, ...]
    lineality: Tuple[Vector, ...]

    def point(self, x: Vector) -> Vector:
        coeffs = coordinates(list(self.complement) + list(self.lineality), x)
        if coeffs is None:
            raise PreconditionError("point is not in the span of the cone")
        return coeffs[:len(self.complement)]

    def functional(self, lam: Vector) -> Vector:
        return tuple(dot(lam, b) for b in self.complement)


def quotient_by_lineality(c: Cone) -> Quotient:
    """The pointed, full-dimensional image of C in span(C)/lineality(C)."""
    span = span_basis(c.generators, c.ambient_dim) if c.generators else []
    parts = [_orthogonal_part(b, c.lineality) for b in span]
    complement = span_basis([p for p in parts if not is_zero(p)], c.ambient_dim)
    k = len(complement)
    basis = list(complement) + list(c.lineality)
    images = [coordinates(basis, r)[:k] for r in c.rays]
    return Quotient(cone=cone_from_generators(images, dim=k), complement=tuple(complement),
                    lineality=c.lineality)


##> ============================================================================
##> NEAREST FACE / LANGLANDS LEMMA
##> ============================================================================

def _perp_generators_in_x(c: Cone, face: Face, inv_gram: Matrix) -> List[Vector]:
    """Generators of F^perp = C* cap span(F)^perp, moved to X with the inverse gram."""
    gens = [c.facets[i] for i in sorted(face.active)]
    gens += list(c.equations) + [neg(e) for e in c.equations]
    return [mat_vec(inv_gram, g) for g in gens]


def accepting_faces(c: Cone, gram: Matrix, x: Sequence) -> List[Tuple[Face, Vector]]:
    """Faces F with p_F(x) in relint F and x - p_F(x) in -F^perp."""
    check_gram(gram, c.ambient_dim)
    x = vec(x)
    c._check_point(x)
    result = []
    for face in c.faces():
        x0 = project(x, face.span_basis, gram)
        if not face.relint_contains(x0):
            continue
        gd = mat_vec(gram, sub(x, x0))
        if any(dot(gd, r) > 0 for r in c.rays) or any(dot(gd, l) != 0 for l in c.lineality):
            continue
        result.append((face, x0))
    return result


def nearest_face(c: Cone, gram: Matrix, x: Sequence) -> Tuple[Face, Vector]:
    """
    The unique face whose relative interior holds the nearest point of C to x.

    Raises:
        NotPositiveDefiniteError: if gram is not symmetric positive definite.
    """
    found = accepting_faces(c, gram, x)
    if len(found) != 1:
        raise DsConesError(f"expected exactly one accepting face, found {len(found)}")
    return found[0]


def _psi_plus_span(c: Cone, face: Face, x: Vector, lam: Vector) -> int:
    """psi of C + span(F): its faces are G + span(F) for faces G containing F."""
    if not c.in_span(x):
        return 0
    if any(dot(lam, c.rays[j]) != 0 for j in face.ray_indices):
        return 0
    total = 0
    for g in c.faces():
        if face.ray_indices <= g.ray_indices and g.in_cone_plus_span(x) and g.dual_contains(lam):
            total += -1 if g.dim % 2 else 1
    return total


def langlands_lhs(c: Cone, gram: Matrix, x: Sequence, y: Sequence) -> int:
    """
    sum_F psi_{C+span F}(-y, -p_{span(F)^perp}(x)) * [p_{span F}(x) in relint F],
    with X identified with its dual through gram.
    """
    check_gram(gram, c.ambient_dim)
    x, y = vec(x), vec(y)
    c._check_point(x)
    c._check_point(y)
    minus_y = neg(y)
    total = 0
    for face in c.faces():
        x0 = project(x, face.span_basis, gram)
        if not face.relint_contains(x0):
            continue
        lam = mat_vec(gram, neg(sub(x, x0)))
        total += _psi_plus_span(c, face, minus_y, lam)
    return total


def perp_face_cone(c: Cone, face: Face, gram: Matrix) -> Cone:
    """F^perp realized inside X through gram."""
    return cone_from_generators(_perp_generators_in_x(c, face, inverse(gram)), dim=c.ambient_dim)


def dual_within_span(c: Cone, gram: Matrix) -> Cone:
    """The dual of C taken inside span(C), X identified with X* through gram."""
    span = span_basis(c.generators, c.ambient_dim) if c.generators else []
    equations = complement_basis(span, c.ambient_dim)
    inequalities = [mat_vec(gram, g) for g in c.generators]
    return cone_from_inequalities(inequalities, equations, dim=c.ambient_dim)
