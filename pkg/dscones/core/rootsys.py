"""
Root systems, Weyl groups and Weyl chambers with exact coordinates.

Coordinates: X* is written in the basis of simple roots of the base chamber
and X in the dual basis of fundamental coweights, so the pairing is the dot
product and the simple coroot alpha_i^vee is row i of the Cartan matrix
A[i][j] = <alpha_i^vee, alpha_j>. Every invariant the package needs (signs,
lengths, cones, regularity) is independent of this choice.

Chambers are stored as sign vectors over the root list. Subsystems keep a
map back to the parent's root indices, so restricting a chamber is a slice of
its sign vector.
"""
import json
import random
import re
import threading
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from dscones.config import settings
from dscones.core.cones import Cone, cone_from_inequalities, psi, psi_simplicial
from dscones.core.ratgeom import (
    Matrix,
    SignCharacter,
    Vector,
    add,
    coordinates,
    dot,
    identity,
    inverse,
    is_zero,
    kernel_basis,
    mat,
    mat_mul,
    mat_vec,
    neg,
    primitive,
    rank,
    scale,
    sign,
    solve_linear,
    sub,
    transpose,
    unit,
    vec,
    vsum,
    zero,
)
from dscones.utils.errors import (
    DimensionMismatchError,
    DsConesError,
    MathPreconditionError,
    NotRegularError,
    PreconditionError,
    UnsupportedSystemError,
)
from dscones.utils.helpers import get_logger


logger = get_logger(__name__)

_MAX_ROOTS = 400


##> ============================================================================
##> CHAMBERS AND WEYL ELEMENTS
##> ============================================================================

@dataclass(frozen=True, eq=False)
class Chamber:
    """An open Weyl chamber, recorded by the sign of every root on it."""
    system: "RootSystem"
    signs: Tuple[int, ...]

    def __eq__(self, other) -> bool:
        return isinstance(other, Chamber) and self.system is other.system and self.signs == other.signs

    def __hash__(self) -> int:
        return hash(self.signs)

    def __repr__(self) -> str:
        return f"Chamber({self.system.label}, {self.word()})"

    def word(self) -> Tuple[int, ...]:
        """Reduced word of the element carrying the base chamber here."""
        return self.system.chamber_element(self).word

    @property
    def positive_indices(self) -> List[int]:
        return [i for i, s in enumerate(self.signs) if s > 0]

    def contains(self, x: Sequence) -> bool:
        x = vec(x)
        return all(sign(dot(r, x)) == s for r, s in zip(self.system.roots, self.signs))

    def closure_contains(self, x: Sequence) -> bool:
        x = vec(x)
        return all(s * dot(r, x) >= 0 for r, s in zip(self.system.roots, self.signs))

    def dual(self) -> "Chamber":
        """C^vee: the chamber in X* on which the coroots of C-positive roots are positive."""
        return Chamber(self.system.dual(), self.signs)


@dataclass(frozen=True)
class WeylElement:
    """w in W, acting on X by `matrix` and on X* by its inverse transpose."""
    matrix: Matrix
    word: Tuple[int, ...]
    system: "RootSystem" = field(compare=False, repr=False)

    @cached_property
    def dual_matrix(self) -> Matrix:
        return transpose(inverse(self.matrix), cols=len(self.matrix))

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def epsilon(self) -> int:
        return -1 if self.length % 2 else 1

    def act(self, x: Sequence) -> Vector:
        return mat_vec(self.matrix, vec(x))

    def act_dual(self, lam: Sequence) -> Vector:
        return mat_vec(self.dual_matrix, vec(lam))

    def act_on_chamber(self, chamber: Chamber) -> Chamber:
        return self.system.chamber_of(self.act(self.system.chamber_point(chamber)))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return self.system.element(mat_mul(self.matrix, other.matrix))

    @property
    def inverse(self) -> "WeylElement":
        return self.system.element(inverse(self.matrix))


##> ============================================================================
##> ROOT SYSTEM
##> ============================================================================

class RootSystem:
    """
    (X, X*, R, R^vee) with roots in X* and index-aligned coroots in X.

    The system is immutable; enumerations (chambers, W, orbit rays, chamber
    data) are computed on first use and cached behind a lock, so concurrent
    readers are safe.
    """

    def __init__(self, roots: Sequence[Sequence], coroots: Sequence[Sequence], label: Optional[str] = None,
                 base_signs: Optional[Sequence[int]] = None, dim: Optional[int] = None):
        self.roots: Tuple[Vector, ...] = tuple(vec(r) for r in roots)
        self.coroots: Tuple[Vector, ...] = tuple(vec(c) for c in coroots)
        if dim is None:
            if not self.roots:
                raise DimensionMismatchError("the dimension of an empty root system must be given")
            dim = len(self.roots[0])
        self.dim = dim
        self.label = label or "custom"
        self._validate()
        self._index: Dict[Vector, int] = {r: i for i, r in enumerate(self.roots)}
        if base_signs is None:
            base_signs = [1 if next(c for c in r if c != 0) > 0 else -1 for r in self.roots]
        self.base_chamber = Chamber(self, tuple(int(s) for s in base_signs))
        self._lock = threading.Lock()
        self._cache: Dict[object, object] = {}
        self._dual: Optional["RootSystem"] = None

    def _validate(self) -> None:
        if len(self.roots) != len(self.coroots):
            raise DimensionMismatchError("roots and coroots must be index-aligned")
        for r, c in zip(self.roots, self.coroots):
            if len(r) != self.dim or len(c) != self.dim:
                raise DimensionMismatchError(f"root or coroot outside dimension {self.dim}")
            if dot(r, c) != 2:
                raise PreconditionError(f"root {r} pairs to {dot(r, c)} with its coroot, expected 2")
        roots = set(self.roots)
        if any(neg(r) not in roots for r in self.roots):
            raise PreconditionError("root set is not closed under negation")

    def __repr__(self) -> str:
        return f"RootSystem({self.label}, dim={self.dim}, roots={len(self.roots)})"

    def _cached(self, key, compute: Callable[[], object]):
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = compute()
        with self._lock:
            return self._cache.setdefault(key, value)

    def cache_slot(self, key, compute: Callable[[], object]):
        """Per-instance memo shared with the constants layer."""
        return self._cached(("ext",) + tuple(key), compute)

    ##> ------------------------------------------------------------------------
    ##> basic data
    ##> ------------------------------------------------------------------------

    @property
    def n_positive(self) -> int:
        return len(self.roots) // 2

    @cached_property
    def rank(self) -> int:
        return rank(self.roots) if self.roots else 0

    @property
    def spans(self) -> bool:
        return self.rank == self.dim

    def index_of(self, root: Sequence) -> int:
        root = vec(root)
        if root not in self._index:
            raise PreconditionError(f"{list(root)} is not a root of {self.label}")
        return self._index[root]

    def negative_index(self, i: int) -> int:
        return self._index[neg(self.roots[i])]

    def dual(self) -> "RootSystem":
        """R^vee in X*, with the same index alignment and base signs."""
        with self._lock:
            if self._dual is None:
                d = RootSystem(self.coroots, self.roots, label=f"{self.label}^vee",
                               base_signs=self.base_chamber.signs, dim=self.dim)
                d._dual = self
                self._dual = d
            return self._dual

    def reflect_point(self, x: Vector, i: int) -> Vector:
        return sub(x, scale(dot(self.roots[i], x), self.coroots[i]))

    def reflect_functional(self, lam: Vector, i: int) -> Vector:
        return sub(lam, scale(dot(lam, self.coroots[i]), self.roots[i]))

    def reflection_matrix(self, i: int) -> Matrix:
        r, c = self.roots[i], self.coroots[i]
        n = self.dim
        return tuple(
            tuple(Fraction(int(a == b)) - c[a] * r[b] for b in range(n)) for a in range(n)
        )

    ##> ------------------------------------------------------------------------
    ##> chambers
    ##> ------------------------------------------------------------------------

    def chamber(self, signs: Sequence[int]) -> Chamber:
        return Chamber(self, tuple(signs))

    def is_regular(self, x: Sequence) -> bool:
        x = vec(x)
        if len(x) != self.dim:
            raise DimensionMismatchError(f"point of dimension {len(x)} for a system on dimension {self.dim}")
        return all(dot(r, x) != 0 for r in self.roots)

    def chamber_of(self, x: Sequence) -> Chamber:
        """
        The chamber containing x.

        Raises:
            NotRegularError: if x lies on a root hyperplane.
        """
        x = vec(x)
        if not self.is_regular(x):
            raise NotRegularError(f"{[str(c) for c in x]} lies on a root hyperplane of {self.label}")
        return Chamber(self, tuple(sign(dot(r, x)) for r in self.roots))

    def simple_indices(self, chamber: Chamber) -> Tuple[int, ...]:
        """Positive roots of the chamber that are not a sum of two positive roots."""
        def compute():
            positive = chamber.positive_indices
            sums = {add(self.roots[i], self.roots[j]) for i in positive for j in positive if i < j}
            return tuple(i for i in positive if self.roots[i] not in sums)
        return self._cached(("simple", chamber.signs), compute)

    def simple_roots(self, chamber: Chamber) -> List[Vector]:
        return [self.roots[i] for i in self.simple_indices(chamber)]

    def simple_coroots(self, chamber: Chamber) -> List[Vector]:
        return [self.coroots[i] for i in self.simple_indices(chamber)]

    def chamber_point(self, chamber: Chamber) -> Vector:
        """A point of the chamber on which every simple root takes the value 1."""
        def compute():
            simple = self.simple_roots(chamber)
            if not simple:
                return zero(self.dim)
            point = solve_linear(simple, [Fraction(1)] * len(simple))
            if point is None:
                raise DsConesError(f"simple roots of a chamber of {self.label} are dependent")
            return point
        return self._cached(("point", chamber.signs), compute)

    def fundamental_coweights(self, chamber: Chamber) -> List[Vector]:
        """The basis of X dual to the simple roots of the chamber."""
        if not self.spans:
            raise PreconditionError(f"{self.label} does not span X*; fundamental coweights are not defined")

        def compute():
            simple = self.simple_roots(chamber)
            if not simple:
                return []
            return list(transpose(inverse(tuple(simple)), cols=self.dim))
        return self._cached(("coweights", chamber.signs), compute)

    def closed_chamber_cone(self, chamber: Chamber) -> Cone:
        return self._cached(
            ("cone", chamber.signs),
            lambda: cone_from_inequalities(self.simple_roots(chamber), dim=self.dim),
        )

    def chamber_psi(self, chamber: Chamber, x: Sequence, lam: Sequence) -> int:
        """psi of the closed chamber; the simplicial index-set rule when R spans X*."""
        x, lam = vec(x), vec(lam)
        if self.spans:
            return psi_simplicial(self.fundamental_coweights(chamber), self.simple_roots(chamber), x, lam)
        return psi(self.closed_chamber_cone(chamber), x, lam)

    def chambers(self) -> List[Chamber]:
        """Every chamber, by a gallery walk from the base chamber through simple walls."""
        def compute():
            found = {self.base_chamber.signs: self.base_chamber}
            queue = deque([self.base_chamber])
            while queue:
                c = queue.popleft()
                p = self.chamber_point(c)
                for i in self.simple_indices(c):
                    d = self.chamber_of(self.reflect_point(p, i))
                    if d.signs not in found:
                        found[d.signs] = d
                        queue.append(d)
            return list(found.values())
        return self._cached(("chambers",), compute)

    def length(self, c1: Chamber, c2: Chamber) -> int:
        """Number of root hyperplanes separating c1 and c2."""
        if c1.system is not c2.system:
            raise DimensionMismatchError("chambers belong to different root systems")
        return sum(1 for a, b in zip(c1.signs, c2.signs) if a != b) // 2

    def epsilon(self, c1: Chamber, c2: Chamber) -> int:
        return -1 if self.length(c1, c2) % 2 else 1

    def delta(self, chamber: Chamber) -> Vector:
        """Half-sum of the coroots of the chamber's positive roots."""
        return scale(Fraction(1, 2), vsum((self.coroots[i] for i in chamber.positive_indices), self.dim))

    def rho(self, chamber: Chamber) -> Vector:
        """Half-sum of the chamber's positive roots."""
        return scale(Fraction(1, 2), vsum((self.roots[i] for i in chamber.positive_indices), self.dim))

    ##> ------------------------------------------------------------------------
    ##> Weyl group
    ##> ------------------------------------------------------------------------

    def weyl_group(self) -> List[WeylElement]:
        """
        W by breadth-first closure over the simple reflections of the base
        chamber; each element keeps the first (hence reduced) word found.
        """
        return self._cached(("weyl",), self._enumerate_weyl)

    def _enumerate_weyl(self) -> List[WeylElement]:
        gens = [self.reflection_matrix(i) for i in self.simple_indices(self.base_chamber)]
        start = WeylElement(identity(self.dim), (), self)
        seen = {start.matrix: start}
        queue = deque([start])
        while queue:
            w = queue.popleft()
            for k, g in enumerate(gens):
                m = mat_mul(w.matrix, g) if self.dim else ()
                if m not in seen:
                    seen[m] = WeylElement(m, w.word + (k,), self)
                    queue.append(seen[m])
        logger.debug("Weyl group of %s has %d elements", self.label, len(seen))
        return list(seen.values())

    def _element_index(self) -> Dict[Matrix, WeylElement]:
        return self._cached(("element_index",), lambda: {w.matrix: w for w in self.weyl_group()})

    @property
    def identity_element(self) -> WeylElement:
        return self.weyl_group()[0]

    def element(self, matrix: Matrix) -> WeylElement:
        found = self._element_index().get(tuple(tuple(row) for row in matrix))
        if found is None:
            raise PreconditionError(f"matrix is not an element of W({self.label})")
        return found

    def element_from_word(self, word: Sequence[int]) -> WeylElement:
        gens = self.simple_indices(self.base_chamber)
        m = identity(self.dim)
        for k in word:
            if not 0 <= k < len(gens):
                raise PreconditionError(f"simple reflection s{k + 1} does not exist in {self.label}")
            m = mat_mul(m, self.reflection_matrix(gens[k]))
        return self.element(m)

    def chamber_element(self, chamber: Chamber) -> WeylElement:
        """The unique w with w(base chamber) = chamber."""
        def compute():
            p0 = self.chamber_point(self.base_chamber)
            return {self.chamber_of(w.act(p0)).signs: w for w in self.weyl_group()}
        table = self._cached(("chamber_elements",), compute)
        return table[chamber.signs]

    def element_between(self, c1: Chamber, c2: Chamber) -> WeylElement:
        """The unique w with w c1 = c2."""
        return self.chamber_element(c2) * self.chamber_element(c1).inverse

    def minus_one_in_W(self) -> bool:
        minus = tuple(neg(row) for row in identity(self.dim))
        return minus in self._element_index()

    def q_invariant(self) -> int:
        """
        q(R) = (|R+| + dim X) / 2.

        Raises:
            MathPreconditionError: if -1 is not in W.
        """
        if not self.minus_one_in_W():
            raise MathPreconditionError(
                f"-1 is not in W({self.label}); q(R) is only defined when -1 is in W"
            )
        return (self.n_positive + self.dim) // 2

    def invariant_gram(self) -> Matrix:
        """A W-invariant positive definite form on X: sum over W of M^T M."""
        def compute():
            n = self.dim
            total = [[Fraction(0)] * n for _ in range(n)]
            for w in self.weyl_group():
                m = w.matrix
                for a in range(n):
                    for b in range(n):
                        total[a][b] += sum((m[k][a] * m[k][b] for k in range(n)), Fraction(0))
            return mat(total)
        return self._cached(("gram",), compute)

    ##> ------------------------------------------------------------------------
    ##> regularity
    ##> ------------------------------------------------------------------------

    def coweight_rays(self) -> List[Vector]:
        """Primitive generators of every 1-dimensional face of every closed chamber in X."""
        def compute():
            base = self.fundamental_coweights(self.base_chamber)
            rays = {primitive(w.act(omega)) for w in self.weyl_group() for omega in base}
            return sorted(rays)
        return self._cached(("coweight_rays",), compute)

    def weight_rays(self) -> List[Vector]:
        return self.dual().coweight_rays()

    def is_R_regular(self, lam: Sequence) -> bool:
        """lam(omega) != 0 for every omega on a 1-dimensional chamber face."""
        lam = vec(lam)
        return all(dot(lam, omega) != 0 for omega in self.coweight_rays())

    def is_Rvee_regular(self, x: Sequence) -> bool:
        x = vec(x)
        return all(dot(x, w) != 0 for w in self.weight_rays())

    def lattice_basis(self, name: str) -> List[Vector]:
        """Bases of the coroot, coweight, root and weight lattices."""
        base = self.base_chamber
        if name == "coroot":
            return self.simple_coroots(base)
        if name == "coweight":
            return self.fundamental_coweights(base)
        if name == "root":
            return self.simple_roots(base)
        if name == "weight":
            return self.dual().fundamental_coweights(base.dual())
        raise PreconditionError(f"unknown lattice {name!r}")


##> ============================================================================
##> CONSTRUCTION FROM CARTAN DATA
##> ============================================================================

def _cartan_block(letter: str, n: int) -> List[List[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if letter in "ABC":
        for i in range(n - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        if letter == "B":
            a[n - 1][n - 2] = -2
        elif letter == "C":
            a[n - 2][n - 1] = -2
    elif letter == "D":
        for i in range(n - 2):
            a[i][i + 1] = a[i + 1][i] = -1
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    elif letter == "G":
        a[0][1], a[1][0] = -3, -1
    elif letter == "F":
        a[0][1] = a[1][0] = -1
        a[1][2], a[2][1] = -1, -2
        a[2][3] = a[3][2] = -1
    return a


_TYPE_RANKS = {"A": 1, "B": 2, "C": 2, "D": 3, "G": 2, "F": 4}


def _parse_factor(text: str) -> List[List[int]]:
    match = re.fullmatch(r"([A-Za-z])(\d+)", text.strip())
    if not match:
        raise UnsupportedSystemError(f"Unsupported Cartan type {text!r}")
    letter, n = match.group(1).upper(), int(match.group(2))
    if letter not in _TYPE_RANKS:
        raise UnsupportedSystemError(f"Unsupported Cartan type {text!r}; supported: A, B, C, D, F4, G2")
    if n < _TYPE_RANKS[letter] or (letter == "G" and n != 2) or (letter == "F" and n != 4):
        raise UnsupportedSystemError(f"Unsupported Cartan type {text!r}")
    return _cartan_block(letter, n)


def block_diagonal(blocks: Sequence[List[List[int]]]) -> List[List[int]]:
    n = sum(len(b) for b in blocks)
    result = [[0] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, value in enumerate(row):
                result[offset + i][offset + j] = value
        offset += len(b)
    return result


def _check_cartan(a: List[List[int]]) -> None:
    n = len(a)
    if any(len(row) != n for row in a):
        raise UnsupportedSystemError("Cartan matrix must be square")
    for i in range(n):
        if a[i][i] != 2:
            raise UnsupportedSystemError("Cartan matrix must have 2 on the diagonal")
        for j in range(n):
            if i == j:
                continue
            if a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0):
                raise UnsupportedSystemError(f"invalid Cartan matrix entry at ({i + 1},{j + 1})")
            if a[i][j] * a[j][i] > 3:
                raise UnsupportedSystemError("Cartan matrix is not of finite type")


def system_from_cartan(a: Sequence[Sequence[int]], label: str) -> RootSystem:
    """
    Close the simple (root, coroot) pairs under simple reflections.

    Raises:
        UnsupportedSystemError: if the matrix is not a finite-type Cartan matrix.
    """
    a = [[int(v) for v in row] for row in a]
    _check_cartan(a)
    n = len(a)
    if n > settings.rank_limit:
        raise UnsupportedSystemError(f"{label} has rank {n} above RANK_LIMIT={settings.rank_limit}")
    coroot_rows = mat(a)
    pairs: Dict[Vector, Vector] = {unit(n, i): coroot_rows[i] for i in range(n)}
    queue = deque(pairs.items())
    while queue:
        r, c = queue.popleft()
        for i in range(n):
            new_r = sub(r, scale(dot(r, coroot_rows[i]), unit(n, i)))
            new_c = sub(c, scale(c[i], coroot_rows[i]))
            if new_r not in pairs:
                pairs[new_r] = new_c
                queue.append((new_r, new_c))
                if len(pairs) > _MAX_ROOTS:
                    raise UnsupportedSystemError(f"{label}: Cartan matrix is not of finite type")

    def key(r: Vector):
        return (sum(r), tuple(-x for x in r))

    positive = sorted((r for r in pairs if all(x >= 0 for x in r)), key=key)
    roots = positive + [neg(r) for r in positive]
    if len(roots) != len(pairs):
        raise UnsupportedSystemError(f"{label}: Cartan matrix is not of finite type")
    signs = [1] * len(positive) + [-1] * len(positive)
    return RootSystem(roots, [pairs[r] for r in roots], label=label, base_signs=signs, dim=n)


@lru_cache(maxsize=None)
def root_system(spec: str) -> RootSystem:
    """
    Build a root system from "A1", "B2", "A1xA1", "F4", ... or a JSON Cartan matrix.

    Instances are cached per spec string so that every caller shares the same
    enumerations.

    Raises:
        UnsupportedSystemError: unknown type, invalid matrix or rank above RANK_LIMIT.
    """
    text = spec.strip()
    if text.startswith("["):
        try:
            matrix = json.loads(text)
        except json.JSONDecodeError as e:
            raise UnsupportedSystemError(f"Cartan matrix is not valid JSON: {e}")
        if not isinstance(matrix, list) or not all(isinstance(row, list) for row in matrix):
            raise UnsupportedSystemError("Cartan matrix must be a list of rows")
        return system_from_cartan(matrix, label="custom")
    if not text:
        raise UnsupportedSystemError("empty Cartan type")
    factors = [f for f in re.split(r"[xX×]", text)]
    blocks = [_parse_factor(f) for f in factors]
    label = "x".join(f.strip().upper() for f in factors)
    return system_from_cartan(block_diagonal(blocks), label=label)


def empty_system(dim: int = 0) -> RootSystem:
    return RootSystem([], [], label="empty", base_signs=[], dim=dim)


##> ============================================================================
##> SUBSYSTEMS
##> ============================================================================

@dataclass(frozen=True)
class Subsystem:
    """
    A root subsystem of `parent` with its own coordinates.

    kind is "ambient" (same X), "quotient" (X / R omega, functionals written
    in a basis of the annihilator of omega) or "wall" (Y = ker alpha, points
    written in a basis of Y). system.roots[k] corresponds to parent root
    indices[k].
    """
    system: RootSystem
    parent: RootSystem
    indices: Tuple[int, ...]
    kind: str
    basis: Tuple[Vector, ...] = ()
    anchor: Optional[Vector] = None

    def chamber(self, chamber: Chamber) -> Chamber:
        """C -> C~, the subsystem chamber containing C."""
        if chamber.system is not self.parent:
            raise DimensionMismatchError("chamber does not belong to the parent system")
        return Chamber(self.system, tuple(chamber.signs[i] for i in self.indices))

    def point(self, x: Sequence) -> Vector:
        x = vec(x)
        if self.kind == "quotient":
            return tuple(dot(z, x) for z in self.basis)
        if self.kind == "wall":
            coeffs = coordinates(list(self.basis), x)
            if coeffs is None:
                raise PreconditionError("point does not lie on the wall")
            return coeffs
        return x

    def functional(self, lam: Sequence) -> Vector:
        lam = vec(lam)
        if self.kind == "quotient":
            coeffs = coordinates(list(self.basis), lam)
            if coeffs is None:
                raise PreconditionError("functional does not vanish on omega")
            return coeffs
        if self.kind == "wall":
            return tuple(dot(lam, b) for b in self.basis)
        return lam


def subsystem_on_x(parent: RootSystem, indices: Sequence[int], label: str,
                   chamber: Optional[Chamber] = None, anchor: Optional[Vector] = None) -> Subsystem:
    """The roots at `indices`, kept in X; the base chamber is the one containing `chamber`."""
    chamber = chamber or parent.base_chamber
    indices = tuple(sorted(indices))
    system = RootSystem(
        [parent.roots[i] for i in indices], [parent.coroots[i] for i in indices], label=label,
        base_signs=[chamber.signs[i] for i in indices], dim=parent.dim,
    )
    return Subsystem(system, parent, indices, "ambient", anchor=anchor)


def _check_omega(parent: RootSystem, omega: Vector) -> Tuple[int, ...]:
    if len(omega) != parent.dim:
        raise DimensionMismatchError(f"omega has dimension {len(omega)}, X has {parent.dim}")
    if is_zero(omega):
        raise PreconditionError("omega must be non-zero")
    indices = tuple(i for i, r in enumerate(parent.roots) if dot(r, omega) == 0)
    vanishing = [parent.roots[i] for i in indices]
    if (rank(vanishing) if vanishing else 0) != parent.dim - 1:
        raise PreconditionError(f"{[str(c) for c in omega]} does not span a 1-dimensional chamber face")
    return indices


def subsystem_omega(parent: RootSystem, omega: Sequence, chamber: Optional[Chamber] = None) -> Subsystem:
    """R_omega = {alpha : alpha(omega) = 0} in X, for omega on a 1-dimensional chamber face."""
    omega = vec(omega)
    indices = _check_omega(parent, omega)
    return subsystem_on_x(parent, indices, f"{parent.label}_omega", chamber, anchor=omega)


def subsystem_quotient(parent: RootSystem, omega: Sequence, chamber: Optional[Chamber] = None) -> Subsystem:
    """R_omega as a root system on X / R omega, its dual space being ann(omega)."""
    omega = vec(omega)
    indices = _check_omega(parent, omega)
    chamber = chamber or parent.base_chamber
    basis = tuple(kernel_basis([omega]))
    roots = [coordinates(list(basis), parent.roots[i]) for i in indices]
    coroots = [tuple(dot(z, parent.coroots[i]) for z in basis) for i in indices]
    system = RootSystem(roots, coroots, label=f"{parent.label}/omega",
                        base_signs=[chamber.signs[i] for i in indices], dim=len(basis))
    return Subsystem(system, parent, indices, "quotient", basis=basis, anchor=omega)


def subsystem_wall(parent: RootSystem, alpha: Sequence, chamber: Optional[Chamber] = None) -> Subsystem:
    """
    R_alpha on Y = ker(alpha): the roots whose coroots lie in Y, restricted to Y.

    Raises:
        PreconditionError: if alpha is not a root.
        MathPreconditionError: if -1 is not in W(R).
    """
    alpha = vec(alpha)
    parent.index_of(alpha)
    if not parent.minus_one_in_W():
        raise MathPreconditionError(f"wall subsystems need -1 in W({parent.label})")

    def compute():
        basis = tuple(kernel_basis([alpha]))
        indices = tuple(j for j, c in enumerate(parent.coroots) if dot(alpha, c) == 0)
        roots = [tuple(dot(parent.roots[j], b) for b in basis) for j in indices]
        coroots = [coordinates(list(basis), parent.coroots[j]) for j in indices]
        return basis, indices, roots, coroots

    basis, indices, roots, coroots = parent.cache_slot(("wall", alpha), compute)
    chamber = chamber or parent.base_chamber
    base_signs = tuple(chamber.signs[j] for j in indices)
    system = parent.cache_slot(
        ("wall_system", alpha, base_signs),
        lambda: RootSystem(roots, coroots, label=f"{parent.label}_alpha", base_signs=base_signs, dim=len(basis)),
    )
    return Subsystem(system, parent, indices, "wall", basis=basis, anchor=alpha)


def subsystem_sign_coroot(parent: RootSystem, chi: SignCharacter, chamber: Optional[Chamber] = None) -> Subsystem:
    """R_s = {alpha : chi(alpha^vee) = 1} for a sign character of the coroot lattice."""
    indices = [i for i, c in enumerate(parent.coroots) if chi(c) == 1]
    return subsystem_on_x(parent, indices, f"{parent.label}_s", chamber)


def subsystem_sign_root(parent: RootSystem, chi: SignCharacter, chamber: Optional[Chamber] = None) -> Subsystem:
    """R_a = {alpha : chi(alpha) = 1} for a sign character of the root lattice."""
    indices = [i for i, r in enumerate(parent.roots) if chi(r) == 1]
    return subsystem_on_x(parent, indices, f"{parent.label}_a", chamber)


def subsystem_two(parent: RootSystem, chamber: Chamber) -> Subsystem:
    """R_C = {alpha : alpha(delta_C) in 2Z}, based at the chamber containing C."""
    d = parent.delta(chamber)

    def even(r: Vector) -> bool:
        v = dot(r, d)
        return v.denominator == 1 and v.numerator % 2 == 0

    indices = [i for i, r in enumerate(parent.roots) if even(r)]
    return subsystem_on_x(parent, indices, f"{parent.label}_C", chamber)


def sign_characters(system: RootSystem, lattice: str) -> List[SignCharacter]:
    """All 2^rank sign characters of the coroot ("coroot") or root ("root") lattice."""
    basis = tuple(system.lattice_basis(lattice))
    result = []
    for mask in range(2 ** len(basis)):
        values = tuple(-1 if mask >> k & 1 else 1 for k in range(len(basis)))
        result.append(SignCharacter(basis, values))
    return result


##> ============================================================================
##> OMEGA-COARSENING
##> ============================================================================

def omega_bijection(parent: RootSystem, omega: Sequence) -> Dict[Chamber, Chamber]:
    """C -> C~ on the chambers whose closure contains omega; a bijection onto R_omega chambers."""
    omega = vec(omega)
    sub_system = subsystem_omega(parent, omega)
    return {c: sub_system.chamber(c) for c in parent.chambers() if c.closure_contains(omega)}


def opposite_chamber(parent: RootSystem, omega: Sequence, c0: Chamber) -> Chamber:
    """The unique C0' with -omega in its closure and the same R_omega chamber as c0."""
    omega = vec(omega)
    sub_system = subsystem_omega(parent, omega)
    target = sub_system.chamber(c0)
    found = [c for c in parent.chambers()
             if c.closure_contains(neg(omega)) and sub_system.chamber(c) == target]
    if len(found) != 1:
        raise DsConesError(f"expected one opposite chamber, found {len(found)}")
    return found[0]


def coroot_on_ray(parent: RootSystem, omega: Sequence) -> Optional[int]:
    """Index of the coroot that is a positive multiple of omega, if any."""
    omega = primitive(vec(omega))
    for j, c in enumerate(parent.coroots):
        if primitive(c) == omega:
            return j
    return None


def half_length_chambers(parent: RootSystem, omega: Sequence, c0: Chamber) -> List[Chamber]:
    """
    Chambers C'' with alpha >= 0 on C'', ker(alpha) a wall of C'' and C''~ = C0~,
    where c * omega = alpha^vee.

    Raises:
        PreconditionError: if no positive multiple of omega is a coroot.
    """
    j = coroot_on_ray(parent, omega)
    if j is None:
        raise PreconditionError("no positive multiple of omega is a coroot")
    sub_system = subsystem_omega(parent, omega)
    target = sub_system.chamber(c0)
    return [
        c for c in parent.chambers()
        if c.signs[j] > 0 and j in parent.simple_indices(c) and sub_system.chamber(c) == target
    ]


##> ============================================================================
##> GENERIC POINTS
##> ============================================================================

def _jitter(rng: random.Random) -> Fraction:
    return 1 + Fraction(rng.randint(1, 9973), 10007)


def generic_point(system: RootSystem, chamber: Chamber, rng: random.Random, attempts: int = 200) -> Vector:
    """
    A point deep inside the chamber, positive jittered combination of its
    fundamental coweights, redrawn until it is R^vee-regular.

    Only the hyperplanes of this system are avoided. A point meant for a
    subsystem on a wall comes from sampling.wall_crossing instead.
    """
    rays = system.fundamental_coweights(chamber)
    if not rays:
        return zero(system.dim)
    for _ in range(attempts):
        x = vsum((scale(_jitter(rng), r) for r in rays), system.dim)
        if system.is_Rvee_regular(x):
            return x
    raise NotRegularError(f"could not draw an R^vee-regular point in a chamber of {system.label}")


def generic_functional(system: RootSystem, chamber: Chamber, rng: random.Random) -> Vector:
    """A deep point of C^vee that is R-regular."""
    return generic_point(system.dual(), chamber.dual(), rng)


def random_vector(dim: int, rng: random.Random, bound: int = 6) -> Vector:
    return tuple(Fraction(rng.randint(-bound, bound)) + Fraction(rng.randint(0, 96), 97) for _ in range(dim))


def random_point(dim: int, rng: random.Random, accept: Callable[[Vector], bool], attempts: int = 200) -> Vector:
    """A random rational vector satisfying accept (a regularity test)."""
    for _ in range(attempts):
        x = random_vector(dim, rng)
        if accept(x):
            return x
    raise NotRegularError("could not draw a point satisfying the regularity test")
