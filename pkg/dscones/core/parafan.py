"""
Levi fans and truncated Kostant sums in the split model.

A Levi subset J of the base simple roots fixes M and the space
a_M = {x : alpha_j(x) = 0, j in J}. The roots outside R_M cut a_M into
relatively open cones C_Q, one per parabolic Q containing M; the open ones
are the C_P for P in P(M). A cell is recorded by the sign of every root on
its relative interior, so Q contains Q1 exactly when every nonzero sign of Q
agrees with Q1.

nu sentinels: NU_MINUS_INF keeps every Kostant term, NU_PLUS_INF keeps
terms only when the cone C_P has no rays.
"""
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union

from dscones.core.cones import Cone, cone_from_generators, cone_from_inequalities, phi, subspace
from dscones.core.conic import ConicFunction, arrangement_samples, relint_function
from dscones.core.ratgeom import (
    Vector,
    add,
    dot,
    in_span,
    kernel_basis,
    neg,
    primitive,
    scale,
    sign,
    solve_linear,
    span_basis,
    sub,
    vec,
    vsum,
)
from dscones.core.rootsys import Chamber, RootSystem, WeylElement
from dscones.utils.errors import DimensionMismatchError, DsConesError, PreconditionError
from dscones.utils.helpers import format_word, get_logger


logger = get_logger(__name__)

NU_MINUS_INF = "-inf"
NU_PLUS_INF = "+inf"

Nu = Union[Vector, str]


##> ============================================================================
##> FAN CELLS
##> ============================================================================

@dataclass(frozen=True)
class FanCell:
    """One cone C_Q of a Levi fan together with its Levi data."""
    index: int
    signs: Tuple[int, ...]
    cone: Cone
    levi_basis: Tuple[Vector, ...]
    levi_indices: Tuple[int, ...]
    sample: Vector

    @property
    def dim(self) -> int:
        """dim a_L."""
        return len(self.levi_basis)

    def contains_point(self, x: Vector) -> bool:
        """x in a_L = span C_Q."""
        return self.cone.in_span(x)

    def relint_contains(self, x: Vector) -> bool:
        return self.cone.relint_contains(x)


@dataclass(frozen=True)
class LeviFan:
    """The fan F(M) of a_M for the Levi subset `levi_subset` of the base simple roots."""
    system: RootSystem
    levi_subset: Tuple[int, ...]
    space_basis: Tuple[Vector, ...]
    m_indices: Tuple[int, ...]
    cells: Tuple[FanCell, ...]

    @property
    def dim(self) -> int:
        return len(self.space_basis)

    def cell(self, q: Union[int, FanCell]) -> FanCell:
        """
        Resolve a cell index (or a cell) against this fan.

        Raises:
            PreconditionError: if q is not a cell of the fan.
        """
        if isinstance(q, FanCell):
            if q.index < len(self.cells) and self.cells[q.index] is q:
                return q
            raise PreconditionError("the parabolic does not belong to this Levi fan")
        if not 0 <= q < len(self.cells):
            raise PreconditionError(f"no parabolic with index {q} in a fan of {len(self.cells)} cones")
        return self.cells[q]

    def open_cells(self) -> List[FanCell]:
        return [c for c in self.cells if c.dim == self.dim]

    def in_space(self, x: Sequence) -> bool:
        x = vec(x)
        if len(x) != self.system.dim:
            raise DimensionMismatchError(f"point of dimension {len(x)} for a fan in dimension {self.system.dim}")
        return in_span(list(self.space_basis), x)

    def cell_of_point(self, x: Sequence) -> FanCell:
        """The cone C_Q whose relative interior contains x."""
        x = vec(x)
        if not self.in_space(x):
            raise PreconditionError(f"{[str(c) for c in x]} does not lie in a_M")
        signs = tuple(sign(dot(r, x)) for r in self.system.roots)
        for c in self.cells:
            if c.signs == signs:
                return c
        raise DsConesError(f"no fan cell has the sign pattern of {[str(c) for c in x]}")

    def standard_point(self) -> Vector:
        """sum of the fundamental coweights outside J; it lies in the standard open cone."""
        omegas = self.system.fundamental_coweights(self.system.base_chamber)
        return vsum((omegas[i] for i in range(len(omegas)) if i not in self.levi_subset), self.system.dim)

    def standard_cell(self) -> FanCell:
        return self.cell_of_point(self.standard_point())

    def cell_from_word(self, word: Sequence[int]) -> FanCell:
        """The cone containing w applied to the standard point; w must preserve a_M."""
        w = self.system.element_from_word(word)
        return self.cell_of_point(w.act(self.standard_point()))

    def contains(self, q: Union[int, FanCell], q1: Union[int, FanCell]) -> bool:
        """Q contains Q1 as parabolics, i.e. C_Q is a face of the closure of C_Q1."""
        q, q1 = self.cell(q), self.cell(q1)
        return all(s == 0 or s == s1 for s, s1 in zip(q.signs, q1.signs))

    def over(self, q1: Union[int, FanCell]) -> List[FanCell]:
        """Every Q containing Q1."""
        return [q for q in self.cells if self.contains(q, q1)]

    def partition_function(self) -> ConicFunction:
        """sum of the indicators of the relatively open cones; equal to the indicator of a_M."""
        total = ConicFunction.zero(self.system.dim)
        for c in self.cells:
            total = total + relint_function(c.cone)
        return total

    def space_cone(self) -> Cone:
        return subspace(list(self.space_basis), self.system.dim)


def _check_levi_subset(system: RootSystem, subset: Sequence[int]) -> Tuple[int, ...]:
    subset = tuple(sorted(set(subset)))
    if any(not 0 <= j < system.rank for j in subset):
        raise PreconditionError(f"Levi subset {[j + 1 for j in subset]} is not a set of simple roots of {system.label}")
    return subset


def _levi_root_indices(system: RootSystem, subset: Tuple[int, ...]) -> Tuple[int, ...]:
    """Roots in the span of the simple roots in subset."""
    simple = system.simple_roots(system.base_chamber)
    basis = span_basis([simple[j] for j in subset], system.dim)
    return tuple(i for i, r in enumerate(system.roots) if in_span(basis, r))


def _hyperplanes(system: RootSystem, skip: Sequence[int]) -> List[Vector]:
    seen = set()
    for i, r in enumerate(system.roots):
        if i in skip:
            continue
        p = primitive(r)
        if next(a for a in p if a != 0) < 0:
            p = neg(p)
        seen.add(p)
    return sorted(seen)


def levi_fan(system: RootSystem, subset: Sequence[int]) -> LeviFan:
    """
    The fan F(M) attached to the Levi subset J.

    Args:
        system: the root system, split model.
        subset: 0-based positions of the simple roots of the base chamber in J.

    Returns:
        LeviFan: cells sorted by (dim a_L, sign vector).

    Raises:
        PreconditionError: if J is not a set of simple roots.
    """
    subset = _check_levi_subset(system, subset)

    def compute() -> LeviFan:
        n = system.dim
        simple = system.simple_roots(system.base_chamber)
        equations = [simple[j] for j in subset]
        space = tuple(kernel_basis(equations, n_cols=n))
        m_indices = _levi_root_indices(system, subset)
        samples = arrangement_samples(_hyperplanes(system, m_indices), n, equations=equations)
        cells = []
        for p in samples:
            signs = tuple(sign(dot(r, p)) for r in system.roots)
            vanishing = [r for r, s in zip(system.roots, signs) if s == 0]
            cone = cone_from_inequalities(
                [scale(s, r) for r, s in zip(system.roots, signs) if s != 0],
                equations=vanishing,
                dim=n,
            )
            levi_basis = tuple(kernel_basis(vanishing, n_cols=n))
            levi_indices = tuple(i for i, s in enumerate(signs) if s == 0)
            cells.append((signs, cone, levi_basis, levi_indices, p))
        cells.sort(key=lambda c: (len(c[2]), c[0]))
        fan = LeviFan(
            system, subset, space, m_indices,
            tuple(FanCell(k, *c) for k, c in enumerate(cells)),
        )
        logger.debug("Levi fan of %s for J=%s has %d cones", system.label, list(subset), len(fan.cells))
        return fan

    return system.cache_slot(("levi_fan", subset), compute)


##> ============================================================================
##> KOSTANT REPRESENTATIVES
##> ============================================================================

def _positive_in(system: RootSystem, chamber: Chamber, v: Vector) -> bool:
    return chamber.signs[system.index_of(v)] > 0


def _kostant_set(system: RootSystem, m_positive: Sequence[int], borel: Chamber) -> List[WeylElement]:
    """{w : w^-1 R+_M is positive on borel}, by (length, word)."""
    reps = []
    for w in system.weyl_group():
        w_inv = w.inverse
        if all(_positive_in(system, borel, w_inv.act_dual(system.roots[i])) for i in m_positive):
            reps.append(w)
    return sorted(reps, key=lambda w: (w.length, w.word))


def kostant_reps(system: RootSystem, subset: Sequence[int]) -> List[WeylElement]:
    """
    Minimal-length representatives of W_L \\ W for the standard Levi of subset.

    Raises:
        PreconditionError: if subset is not a set of simple roots.
    """
    subset = _check_levi_subset(system, subset)
    base = system.base_chamber
    m_positive = [i for i in _levi_root_indices(system, subset) if base.signs[i] > 0]
    return _kostant_set(system, m_positive, base)


##> ============================================================================
##> NU PROFILES
##> ============================================================================

def levi_projection(system: RootSystem, levi_indices: Sequence[int], mu: Sequence) -> Vector:
    """p_L: project X* along span R_L onto the annihilator of span R_L^vee."""
    mu = vec(mu)
    if len(mu) != system.dim:
        raise DimensionMismatchError(f"weight of dimension {len(mu)} for {system.label} on dimension {system.dim}")
    roots = span_basis([system.roots[i] for i in levi_indices], system.dim)
    if not roots:
        return mu
    coroots = span_basis([system.coroots[i] for i in levi_indices], system.dim)
    normal = tuple(tuple(dot(a, b) for a in roots) for b in coroots)
    coeffs = solve_linear(normal, tuple(dot(mu, b) for b in coroots))
    if coeffs is None:
        raise DsConesError("roots and coroots of a Levi subsystem pair degenerately")
    return sub(mu, vsum((scale(c, a) for c, a in zip(coeffs, roots)), system.dim))


def _dominating_elements(system: RootSystem, x: Vector) -> List[WeylElement]:
    base = system.base_chamber
    return [w for w in system.weyl_group() if base.closure_contains(w.act(x))]


def nu_restrict(system: RootSystem, nu: Sequence, cell: FanCell) -> Vector:
    """
    nu_Q: transport nu to the standard form of Q, restrict to a_L, transport back.

    Every w carrying C_Q into the closed base chamber is tried; they must
    all give the same functional.

    Raises:
        DsConesError: if two conjugating elements disagree.
    """
    nu = vec(nu)
    if len(nu) != system.dim:
        raise DimensionMismatchError(f"nu of dimension {len(nu)} for {system.label} on dimension {system.dim}")
    values = {
        levi_projection(system, cell.levi_indices, w.inverse.act_dual(nu))
        for w in _dominating_elements(system, cell.sample)
    }
    if len(values) != 1:
        raise DsConesError(f"nu_Q depends on the conjugating element ({len(values)} values)")
    return values.pop()


def nu_middle(system: RootSystem) -> Vector:
    """nu_m = -rho_0 (the central part vanishes in the semisimple model)."""
    return neg(system.rho(system.base_chamber))


##> ============================================================================
##> TRUNCATED KOSTANT SUMS
##> ============================================================================

@dataclass(frozen=True)
class WeightTerm:
    sign: int
    weight: Vector
    kostant_length: int
    word: Tuple[int, ...]


@dataclass(frozen=True)
class VirtualWeightSum:
    """E^nu_P as a signed list of M-highest weights."""
    terms: Tuple[WeightTerm, ...]

    def __len__(self) -> int:
        return len(self.terms)

    def signed_weights(self) -> Dict[Vector, int]:
        """weight -> total sign, cancelled terms dropped."""
        counts: Counter = Counter()
        for t in self.terms:
            counts[t.weight] += t.sign
        return {w: c for w, c in counts.items() if c}


def _check_dominant(system: RootSystem, lam: Vector) -> None:
    for k, coroot in enumerate(system.simple_coroots(system.base_chamber)):
        pairing = dot(lam, coroot)
        if pairing < 0 or pairing.denominator != 1:
            raise PreconditionError(
                f"lambda is not a dominant weight: <lambda, alpha_{k + 1}^vee> = {pairing}"
            )


@dataclass(frozen=True)
class _BorelData:
    chamber: Chamber
    lam: Vector
    rho: Vector
    reps: Tuple[WeylElement, ...]


def _borel_data(fan: LeviFan, cell: FanCell, lam: Vector) -> _BorelData:
    """B(P) with R+_B = R+_M and the roots positive on C_P; lambda and rho moved to B."""
    system = fan.system
    base = system.base_chamber
    if cell.dim != fan.dim:
        raise PreconditionError(f"cone {cell.index} is not open in a_M; E^nu_P needs P in P(M)")
    m_set = set(fan.m_indices)
    signs = tuple(base.signs[i] if i in m_set else s for i, s in enumerate(cell.signs))
    borel = system.chamber(signs)
    u = system.chamber_element(borel)
    m_positive = [i for i in fan.m_indices if base.signs[i] > 0]
    reps = tuple(_kostant_set(system, m_positive, borel))
    return _BorelData(borel, u.act_dual(lam), system.rho(borel), reps)


def _prepare(system: RootSystem, subset: Sequence[int], p: Union[int, FanCell], lam: Sequence):
    lam = vec(lam)
    if len(lam) != system.dim:
        raise DimensionMismatchError(f"lambda of dimension {len(lam)} for {system.label} on dimension {system.dim}")
    _check_dominant(system, lam)
    fan = levi_fan(system, subset)
    cell = fan.cell(p.index if isinstance(p, FanCell) else p)
    return fan, cell, _borel_data(fan, cell, lam)


def _truncation_test(system: RootSystem, cell: FanCell, nu: Nu):
    rays = list(cell.cone.rays) + list(cell.cone.lineality) + [neg(v) for v in cell.cone.lineality]
    if nu == NU_MINUS_INF:
        return lambda mu: True
    if nu == NU_PLUS_INF:
        return lambda mu: not rays
    if isinstance(nu, str):
        raise PreconditionError(f"unknown nu sentinel {nu!r}; use {NU_MINUS_INF!r} or {NU_PLUS_INF!r}")
    nu_p = nu_restrict(system, nu, cell)
    return lambda mu: all(dot(sub(mu, nu_p), r) >= 0 for r in rays)


def truncated_cohomology(system: RootSystem, subset: Sequence[int], p: Union[int, FanCell],
                         lam: Sequence, nu: Nu) -> VirtualWeightSum:
    """
    E^nu_P: the Kostant weights w(lam_B + rho_B) - rho_B, w in W', with sign
    eps(w), kept when the weight minus nu_P is non-negative on C_P.

    Args:
        system: the root system.
        subset: the Levi subset J of M.
        p: index of an open cone of the fan of J.
        lam: a dominant weight for the base chamber.
        nu: a weight in X*, or NU_MINUS_INF / NU_PLUS_INF.

    Returns:
        VirtualWeightSum: terms ordered by (Kostant length, word).

    Raises:
        PreconditionError: if lam is not dominant or P is not open.
    """
    fan, cell, data = _prepare(system, subset, p, lam)
    keep = _truncation_test(system, cell, nu)
    shifted = add(data.lam, data.rho)
    terms = []
    for w in data.reps:
        mu = sub(w.act_dual(shifted), data.rho)
        if keep(mu):
            length = system.length(data.chamber, w.act_on_chamber(data.chamber))
            terms.append(WeightTerm(w.epsilon, mu, length, w.word))
    logger.debug("E^nu_P on %s cone %d keeps %d of %d terms", system.label, cell.index, len(terms), len(data.reps))
    return VirtualWeightSum(tuple(terms))


def untruncated_weights(system: RootSystem, subset: Sequence[int], p: Union[int, FanCell],
                        lam: Sequence) -> List[Vector]:
    """The multiset {w(lam_B + rho_B) : w in W'}, sorted; it does not depend on P."""
    _, _, data = _prepare(system, subset, p, lam)
    shifted = add(data.lam, data.rho)
    return sorted(w.act_dual(shifted) for w in data.reps)


##> ============================================================================
##> LEFSCHETZ WEIGHT FACTOR AND THE FAN FORM OF THE FACE-SUM IDENTITY
##> ============================================================================

def lefschetz_weight_factor(fan: LeviFan, q: Union[int, FanCell], x: Sequence, mu: Sequence,
                            nu: Sequence) -> int:
    """
    (-1)^dim a_L phi_{C_Q}(-x, p_L(mu) - nu_Q).

    Raises:
        PreconditionError: if x is not in a_L.
    """
    system = fan.system
    cell = fan.cell(q)
    x, mu = vec(x), vec(mu)
    if len(x) != system.dim:
        raise DimensionMismatchError(f"point of dimension {len(x)} for {system.label} on dimension {system.dim}")
    if not cell.contains_point(x):
        raise PreconditionError(f"x={[str(c) for c in x]} does not lie in a_L of cone {cell.index}")
    eta = sub(levi_projection(system, cell.levi_indices, mu), nu_restrict(system, nu, cell))
    return (-1) ** cell.dim * phi(cell.cone, neg(x), eta)


def _dual_indicator(cell: FanCell, eta: Vector) -> int:
    """xi_{C_Q^*} evaluated on the restriction of eta to a_L."""
    cone = cell.cone
    ok = all(dot(eta, r) >= 0 for r in cone.rays) and all(dot(eta, l) == 0 for l in cone.lineality)
    return 1 if ok else 0


def _selects(q1: FanCell, q: FanCell, minus_x: Vector) -> bool:
    """-x in the relative interior of closure(C_Q1) + a_L."""
    span = list(q.levi_basis) + [neg(b) for b in q.levi_basis]
    target = cone_from_generators(q1.cone.generators + span, dim=len(minus_x))
    return target.relint_contains(minus_x)


def identity_5_6_check(system: RootSystem, subset: Sequence[int], x: Sequence, mu: Sequence,
                       nu: Sequence) -> bool:
    """
    For every Q1 whose a_L1 contains x, compare
    sum over Q containing Q1 with -x in C_Q1 + a_L of
    (-1)^(dim a_L1 - dim a_L) xi_{C_Q^*}(p_L(mu) - nu_Q)
    against (-1)^dim a_L1 phi_Q1(-x, p_L1(mu) - nu_Q1).

    Raises:
        PreconditionError: if x is not in a_M.
    """
    fan = levi_fan(system, subset)
    x, mu, nu = vec(x), vec(mu), vec(nu)
    if not fan.in_space(x):
        raise PreconditionError(f"x={[str(c) for c in x]} does not lie in a_M")
    minus_x = neg(x)
    nu_cache: Dict[int, Vector] = {}

    def eta(q: FanCell) -> Vector:
        if q.index not in nu_cache:
            nu_cache[q.index] = nu_restrict(system, nu, q)
        return sub(levi_projection(system, q.levi_indices, mu), nu_cache[q.index])

    for q1 in fan.cells:
        if not q1.contains_point(x):
            continue
        lhs = sum(
            (-1) ** (q1.dim - q.dim) * _dual_indicator(q, eta(q))
            for q in fan.over(q1)
            if _selects(q1, q, minus_x)
        )
        rhs = lefschetz_weight_factor(fan, q1, x, mu, nu)
        if lhs != rhs:
            logger.debug("face-sum identity fails on %s cone %d: %d != %d", system.label, q1.index, lhs, rhs)
            return False
    return True


def cell_label(fan: LeviFan, cell: FanCell) -> str:
    """Readable name: the word of a Weyl element carrying the standard cone onto an open cell, else its index."""
    if cell.dim == fan.dim:
        p = fan.standard_point()
        for w in fan.system.weyl_group():
            if cell.relint_contains(w.act(p)):
                return format_word(w.word)
    return f"#{cell.index}"
