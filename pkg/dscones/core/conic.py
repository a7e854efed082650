"""
Conic functions: integer combinations of indicator functions of closed cones.

Equality is extensional. conic_equal refines space into the cells of the
hyperplane arrangement spanned by every bounding hyperplane of every cone in
f - g and evaluates f - g at one relative-interior point per cell.
"""
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from dscones.core.cones import (
    Cone,
    cone_from_generators,
    dual,
    double_description,
    perp_face_cone,
    dual_within_span,
    cone_sum,
    negate,
    psi,
)
from dscones.core.ratgeom import Matrix, Vector, dot, neg, primitive, vec, vsum
from dscones.utils.errors import DimensionMismatchError
from dscones.utils.helpers import get_logger


logger = get_logger(__name__)


@dataclass(frozen=True)
class ConicFunction:
    """A finite formal sum sum_i n_i xi_{C_i} with like cones combined."""
    ambient_dim: int
    terms: Tuple[Tuple[int, Cone], ...] = ()

    @classmethod
    def indicator(cls, cone: Cone, coefficient: int = 1) -> "ConicFunction":
        return cls(cone.ambient_dim, ((coefficient, cone),)).simplified()

    @classmethod
    def zero(cls, ambient_dim: int) -> "ConicFunction":
        return cls(ambient_dim, ())

    @classmethod
    def from_terms(cls, ambient_dim: int, terms: Iterable[Tuple[int, Cone]]) -> "ConicFunction":
        return cls(ambient_dim, tuple(terms)).simplified()

    def simplified(self) -> "ConicFunction":
        combined: Dict[Cone, int] = {}
        for coefficient, cone in self.terms:
            if cone.ambient_dim != self.ambient_dim:
                raise DimensionMismatchError("cone dimension differs from the function's ambient dimension")
            combined[cone] = combined.get(cone, 0) + coefficient
        kept = sorted(((c, k) for k, c in combined.items() if c), key=lambda t: t[1].key())
        return ConicFunction(self.ambient_dim, tuple(kept))

    def _check(self, other: "ConicFunction") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError(f"conic functions on dimensions {self.ambient_dim} and {other.ambient_dim}")

    def __add__(self, other: "ConicFunction") -> "ConicFunction":
        self._check(other)
        return ConicFunction(self.ambient_dim, self.terms + other.terms).simplified()

    def __neg__(self) -> "ConicFunction":
        return ConicFunction(self.ambient_dim, tuple((-c, k) for c, k in self.terms))

    def __sub__(self, other: "ConicFunction") -> "ConicFunction":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "ConicFunction":
        return ConicFunction(self.ambient_dim, tuple((scalar * c, k) for c, k in self.terms)).simplified()

    def evaluate(self, x: Sequence) -> int:
        x = vec(x)
        if len(x) != self.ambient_dim:
            raise DimensionMismatchError(f"point of dimension {len(x)} for function on dimension {self.ambient_dim}")
        return sum(c for c, cone in self.terms if cone.contains(x))

    def __call__(self, x: Sequence) -> int:
        return self.evaluate(x)

    @property
    def is_zero_expression(self) -> bool:
        return not self.terms


##> ============================================================================
##> OPERATORS
##> ============================================================================

def _signed_face_expansion(cone: Cone, coefficient: int) -> List[Tuple[int, Cone]]:
    return [((-1) ** face.dim * coefficient, face.cone) for face in cone.faces()]


def relint_function(cone: Cone) -> ConicFunction:
    """xi of the relative interior: (-1)^dim C sum_F (-1)^dim F xi_F."""
    return ConicFunction.from_terms(cone.ambient_dim, _signed_face_expansion(cone, (-1) ** cone.dim))


def conic_star(f: ConicFunction) -> ConicFunction:
    """xi_C -> (-1)^dim C xi_{relint C}, expanded back into closed cones."""
    terms: List[Tuple[int, Cone]] = []
    for coefficient, cone in f.terms:
        terms.extend(_signed_face_expansion(cone, coefficient))
    return ConicFunction.from_terms(f.ambient_dim, terms)


def conic_wedge(f: ConicFunction) -> ConicFunction:
    """xi_C -> (-1)^(n - dim C*) xi_{relint C*}, a function on the dual space."""
    n = f.ambient_dim
    terms: List[Tuple[int, Cone]] = []
    for coefficient, cone in f.terms:
        terms.extend(_signed_face_expansion(dual(cone), coefficient * (-1) ** n))
    return ConicFunction.from_terms(n, terms)


def psi_conic(f: ConicFunction, x: Sequence, lam: Sequence) -> int:
    """The biconic extension psi_f = sum_i n_i psi_{C_i}."""
    return sum(c * psi(cone, x, lam) for c, cone in f.terms)


##> ============================================================================
##> ARRANGEMENT REFINEMENT
##> ============================================================================

def _bounding_hyperplanes(f: ConicFunction) -> List[Vector]:
    seen = set()
    result = []
    for _, cone in f.terms:
        for h in list(cone.facets) + list(cone.equations):
            p = primitive(h)
            first = next(a for a in p if a != 0)
            if first < 0:
                p = neg(p)
            if p not in seen:
                seen.add(p)
                result.append(p)
    return sorted(result)


def _cell_sample(equations: List[Vector], strict: List[Vector], n: int) -> Optional[Vector]:
    """A point of {E y = 0, S y > 0}, or None if that relatively open cell is empty."""
    constraints = list(strict) + list(equations) + [neg(e) for e in equations]
    _, rays = double_description(constraints, n)
    sample = vsum(rays, n)
    if all(dot(s, sample) > 0 for s in strict):
        return sample
    return None


def arrangement_samples(hyperplanes: Sequence[Vector], n: int, equations: Sequence[Vector] = ()) -> List[Vector]:
    """One relative-interior point for every nonempty cell of the central arrangement inside {E y = 0}."""
    cells: List[Tuple[List[Vector], List[Vector], Vector]] = [(list(equations), [], tuple(Fraction(0) for _ in range(n)))]
    for h in hyperplanes:
        refined = []
        for held, strict, _ in cells:
            for eqs, sts in ((held + [h], strict), (held, strict + [h]), (held, strict + [neg(h)])):
                sample = _cell_sample(eqs, sts, n)
                if sample is not None:
                    refined.append((eqs, sts, sample))
        cells = refined
    return [sample for _, _, sample in cells]


def _random_points(n: int, count: int, seed: int) -> List[Vector]:
    rng = random.Random(seed)
    return [tuple(Fraction(rng.randint(-4, 4)) for _ in range(n)) for _ in range(count)]


def conic_equal(f: ConicFunction, g: ConicFunction) -> bool:
    """True iff f and g take the same value at every point."""
    f._check(g)
    h = f - g
    if h.is_zero_expression:
        return True
    n = h.ambient_dim
    for point in _random_points(n, 25, seed=n):
        if h.evaluate(point) != 0:
            return False
    hyperplanes = _bounding_hyperplanes(h)
    samples = arrangement_samples(hyperplanes, n)
    logger.debug("conic_equal refined %d hyperplanes into %d cells", len(hyperplanes), len(samples))
    return all(h.evaluate(point) == 0 for point in samples)


##> ============================================================================
##> FACE-SUM IDENTITIES OVER A GRAM-IDENTIFIED SPACE
##> ============================================================================

def nearest_point_partition(cone: Cone, gram: Matrix) -> ConicFunction:
    """
    sum_F xi of relint(F) + (-F^perp); identically 1.

    -F^perp is closed, so each piece expands over the faces G of -F^perp into
    the open direct sums relint(F) + relint(G).
    """
    n = cone.ambient_dim
    total = ConicFunction.zero(n)
    for face in cone.faces():
        normal = negate(perp_face_cone(cone, face, gram))
        for g in normal.faces():
            total = total + relint_function(cone_sum(face.cone, g.cone))
    return total


def perp_face_sum(cone: Cone, gram: Matrix) -> ConicFunction:
    """sum_F (-1)^dim F^perp xi of relint(F^perp) + relint(F)."""
    n = cone.ambient_dim
    total = ConicFunction.zero(n)
    for face in cone.faces():
        piece = cone_sum(perp_face_cone(cone, face, gram), face.cone)
        total = total + ((-1) ** face.perp_dim) * relint_function(piece)
    return total


def dual_face_sum(cone: Cone, gram: Matrix) -> ConicFunction:
    """sum_F (-1)^dim F xi of relint((F^perp)*) + relint(F*), each dual taken in its own span."""
    n = cone.ambient_dim
    total = ConicFunction.zero(n)
    for face in cone.faces():
        perp_dual = dual_within_span(perp_face_cone(cone, face, gram), gram)
        face_dual = dual_within_span(face.cone, gram)
        piece = cone_sum(perp_dual, face_dual)
        total = total + ((-1) ** face.dim) * relint_function(piece)
    return total


def full_space(n: int) -> Cone:
    return dual(origin(n))


def origin(n: int) -> Cone:
    return cone_from_generators([], dim=n)
