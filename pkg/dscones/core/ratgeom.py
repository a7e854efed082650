"""
Exact rational linear algebra kernel.

Vectors are tuples of Fraction and matrices are tuples of row tuples. Every
routine is exact; no tolerance parameter exists anywhere in the package.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from dscones.utils.errors import DimensionMismatchError, NotPositiveDefiniteError, PreconditionError


Vector = Tuple[Fraction, ...]
Matrix = Tuple[Vector, ...]


##> ============================================================================
##> VECTORS
##> ============================================================================

def vec(values: Iterable) -> Vector:
    """Coerce any iterable of ints/Fractions/strings into an exact vector."""
    return tuple(Fraction(v) for v in values)


def zero(n: int) -> Vector:
    return tuple(Fraction(0) for _ in range(n))


def unit(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def _check_dims(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise DimensionMismatchError(f"dimension mismatch: {len(u)} vs {len(v)}")


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    _check_dims(u, v)
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Vector, v: Vector) -> Vector:
    _check_dims(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    _check_dims(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in v)


def neg(v: Vector) -> Vector:
    return tuple(-a for a in v)


def vsum(vectors: Iterable[Vector], n: int) -> Vector:
    total = zero(n)
    for v in vectors:
        total = add(total, v)
    return total


def is_zero(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


def sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def primitive(v: Sequence[Fraction]) -> Vector:
    """Scale v by a positive rational to a primitive integer vector (direction kept)."""
    if is_zero(v):
        return tuple(Fraction(0) for _ in v)
    den = reduce(lambda a, b: a * b // gcd(a, b), (Fraction(a).denominator for a in v), 1)
    ints = [int(Fraction(a) * den) for a in v]
    g = reduce(gcd, (abs(a) for a in ints if a), 0)
    return tuple(Fraction(a // g) for a in ints)


##> ============================================================================
##> MATRICES
##> ============================================================================

def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vec(row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(unit(n, i) for i in range(n))


def transpose(m: Sequence[Sequence[Fraction]], cols: Optional[int] = None) -> Matrix:
    if not m:
        return tuple(() for _ in range(cols or 0))
    return tuple(tuple(row[j] for row in m) for j in range(len(m[0])))


def mat_vec(m: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vector:
    return tuple(dot(row, v) for row in m)


def vec_mat(v: Sequence[Fraction], m: Sequence[Sequence[Fraction]]) -> Vector:
    """Row vector times matrix."""
    if len(v) != len(m):
        raise DimensionMismatchError(f"dimension mismatch: {len(v)} vs {len(m)} rows")
    cols = len(m[0]) if m else 0
    return tuple(sum((v[i] * m[i][j] for i in range(len(v))), Fraction(0)) for j in range(cols))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and len(a[0]) != len(b):
        raise DimensionMismatchError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x?")
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def rref(m: Sequence[Sequence[Fraction]]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form with exact pivoting; returns (rows, pivot columns)."""
    rows = [[Fraction(a) for a in row] for row in m]
    if not rows:
        return [], []
    n_cols = len(rows[0])
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [a * inv for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(m: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(m)[1])


def determinant(m: Sequence[Sequence[Fraction]]) -> Fraction:
    rows = [[Fraction(a) for a in row] for row in m]
    n = len(rows)
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det *= rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                factor = rows[i][c] / rows[c][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[c])]
    return det


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    augmented = [list(row) + list(unit(n, i)) for i, row in enumerate(m)]
    rows, pivots = rref(augmented)
    if pivots[:n] != list(range(n)) or len(rows) < n:
        raise PreconditionError("matrix is singular")
    return tuple(tuple(row[n:]) for row in rows)


##> ============================================================================
##> SOLVING
##> ============================================================================

def solve_linear(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Optional[Vector]:
    """
    Return some x with A.x = b, or None when the system is inconsistent.

    Raises:
        DimensionMismatchError: if A has a different number of rows than b has entries.
    """
    if len(a) != len(b):
        raise DimensionMismatchError(f"A has {len(a)} rows but b has dimension {len(b)}")
    if not a:
        return ()
    n_cols = len(a[0])
    augmented = [list(row) + [Fraction(bi)] for row, bi in zip(a, b)]
    rows, pivots = rref(augmented)
    if pivots and pivots[-1] == n_cols:
        return None
    x = [Fraction(0)] * n_cols
    for row, c in zip(rows, pivots):
        x[c] = row[n_cols]
    return tuple(x)


def kernel_basis(a: Sequence[Sequence[Fraction]], n_cols: Optional[int] = None) -> List[Vector]:
    """Basis of {x : A.x = 0}; empty iff A is injective. n_cols is needed when A has no rows."""
    if not a:
        return [unit(n_cols or 0, i) for i in range(n_cols or 0)]
    n = len(a[0])
    rows, pivots = rref(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, c in zip(rows, pivots):
            x[c] = -row[f]
        basis.append(primitive(x))
    return basis


def span_basis(vectors: Sequence[Vector], n: int) -> List[Vector]:
    """Canonical basis of the span: primitive rows of the RREF."""
    if not vectors:
        return []
    rows, _ = rref(vectors)
    return [primitive(row) for row in rows]


def complement_basis(vectors: Sequence[Vector], n: int) -> List[Vector]:
    """Basis of the annihilator {y : y.v = 0 for all v}, under the standard pairing."""
    return kernel_basis(list(vectors), n_cols=n)


def coordinates(basis: Sequence[Vector], v: Vector) -> Optional[Vector]:
    """Coefficients c with sum c_i basis_i = v, or None if v is not in the span."""
    if not basis:
        return () if is_zero(v) else None
    return solve_linear(transpose(basis), v)


def in_span(basis: Sequence[Vector], v: Vector) -> bool:
    return coordinates(basis, v) is not None


def project(v: Vector, basis: Sequence[Vector], gram: Optional[Matrix] = None) -> Vector:
    """Orthogonal projection of v onto span(basis) for the inner product given by gram."""
    n = len(v)
    if not basis:
        return zero(n)
    g = gram if gram is not None else identity(n)
    gb = [mat_vec(g, b) for b in basis]
    normal = tuple(tuple(dot(bi, gbj) for gbj in gb) for bi in basis)
    rhs = tuple(dot(gbi, v) for gbi in gb)
    coeffs = solve_linear(normal, rhs)
    return vsum((scale(c, b) for c, b in zip(coeffs, basis)), n)


def is_positive_definite(gram: Matrix) -> bool:
    """Sylvester's criterion on leading principal minors (symmetry required)."""
    n = len(gram)
    if any(len(row) != n for row in gram):
        return False
    if any(gram[i][j] != gram[j][i] for i in range(n) for j in range(n)):
        return False
    return all(determinant([row[:k] for row in gram[:k]]) > 0 for k in range(1, n + 1))


def check_gram(gram: Matrix, n: int) -> None:
    if len(gram) != n:
        raise DimensionMismatchError(f"gram is {len(gram)}x{len(gram)}, expected {n}x{n}")
    if not is_positive_definite(gram):
        raise NotPositiveDefiniteError("gram matrix is not symmetric positive definite")


##> ============================================================================
##> SIGN CHARACTERS
##> ============================================================================

@dataclass(frozen=True)
class SignCharacter:
    """A homomorphism lattice -> {+1,-1} given by its values on a lattice basis."""
    lattice_basis: Tuple[Vector, ...]
    values: Tuple[int, ...]

    def __post_init__(self):
        if len(self.lattice_basis) != len(self.values):
            raise PreconditionError("SignCharacter needs one value per basis vector")
        if any(v not in (1, -1) for v in self.values):
            raise PreconditionError("SignCharacter values must be +1 or -1")

    def __call__(self, v: Vector) -> int:
        coeffs = integer_coordinates(self.lattice_basis, v)
        if coeffs is None:
            raise PreconditionError(f"{v} is not in the character's lattice")
        result = 1
        for c, value in zip(coeffs, self.values):
            if value == -1 and c % 2:
                result = -result
        return result

    @property
    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.values)


def integer_coordinates(basis: Sequence[Vector], v: Vector) -> Optional[Tuple[int, ...]]:
    coeffs = coordinates(basis, v)
    if coeffs is None or any(c.denominator != 1 for c in coeffs):
        return None
    return tuple(int(c) for c in coeffs)


def _solve_gf2(rows: List[List[int]], rhs: List[int]) -> bool:
    rows = [r[:] + [b] for r, b in zip(rows, rhs)]
    if not rows:
        return True
    n = len(rows[0]) - 1
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                rows[i] = [a ^ b for a, b in zip(rows[i], rows[r])]
        r += 1
    return not any(row[n] and not any(row[:n]) for row in rows)


def sign_character_lifts(chi: SignCharacter, superlattice_basis: Sequence[Vector]) -> bool:
    """
    Decide whether chi extends to a {+1,-1}-valued character of the superlattice.

    A character of the superlattice is a choice e_i in GF(2) per basis vector;
    it restricts to chi iff sum_i A_ij e_i = [chi(l_j) = -1] mod 2, where
    l_j = sum_i A_ij m_i.

    Raises:
        PreconditionError: if some lattice vector is not an integral combination
        of the superlattice basis.
    """
    columns = []
    for l in chi.lattice_basis:
        coeffs = integer_coordinates(superlattice_basis, l)
        if coeffs is None:
            raise PreconditionError(f"lattice vector {l} is not in the superlattice")
        columns.append([c % 2 for c in coeffs])
    rhs = [1 if value == -1 else 0 for value in chi.values]
    return _solve_gf2(columns, rhs)
