"""
Chamber sums psi_R, the stable constants m_R = cbar_R, d-tables, twisted
sums and the individual constants b_R.

cbar is computed by an oracle that never touches psi: it starts from 0 on
the chamber where lambda is positive and walks the chamber graph with the
wall relation cbar(x) + cbar(x') = 2 cbar_{R_Y}(y, lambda_Y), recursing into
the wall systems. Every edge of the graph is checked, so a returned table is
path independent.
"""
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from dscones.config import settings
from dscones.core.ratgeom import (
    SignCharacter,
    Vector,
    add,
    dot,
    inverse,
    mat_vec,
    scale,
    sign,
    sign_character_lifts,
    sub,
    vec,
)
from dscones.core.rootsys import (
    Chamber,
    RootSystem,
    Subsystem,
    WeylElement,
    generic_functional,
    generic_point,
    subsystem_on_x,
    subsystem_sign_coroot,
    subsystem_sign_root,
    subsystem_two,
    subsystem_wall,
)
from dscones.utils.errors import (
    DimensionMismatchError,
    DsConesError,
    GenericityError,
    MathPreconditionError,
    NotRegularError,
    OrbitError,
    PreconditionError,
)
from dscones.utils.helpers import format_word, get_logger


logger = get_logger(__name__)


def _check_dims(system: RootSystem, *vectors: Sequence) -> None:
    for v in vectors:
        if len(v) != system.dim:
            raise DimensionMismatchError(f"vector of dimension {len(v)} for {system.label} on dimension {system.dim}")


def _require_minus_one(system: RootSystem, what: str) -> None:
    if not system.minus_one_in_W():
        raise MathPreconditionError(
            f"{what} needs -1 in W({system.label}); psi_R vanishes identically "
            "on regular inputs when -1 is not in W"
        )


##> ============================================================================
##> CHAMBER SUMS
##> ============================================================================

def psi_R(system: RootSystem, c0: Chamber, x: Sequence, lam: Sequence) -> int:
    """psi_R(C0, x, lam) = sum over chambers C of eps(C0, C) psi_C(x, lam)."""
    x, lam = vec(x), vec(lam)
    _check_dims(system, x, lam)
    if c0.system is not system:
        raise DimensionMismatchError("base chamber belongs to another root system")
    return sum(system.epsilon(c0, c) * system.chamber_psi(c, x, lam) for c in system.chambers())


def m_R(system: RootSystem, x: Sequence, lam: Sequence) -> int:
    """
    m_R(x, lam) = psi_R(C_x, x, lam).

    Raises:
        NotRegularError: if x is not regular or lam is not R-regular.
    """
    x, lam = vec(x), vec(lam)
    _check_dims(system, x, lam)
    if not system.is_R_regular(lam):
        raise NotRegularError(f"lambda is not R-regular for {system.label}")
    return psi_R(system, system.chamber_of(x), x, lam)


##> ============================================================================
##> CBAR RECURSION ORACLE
##> ============================================================================

def _lambda_cell_key(system: RootSystem, lam: Vector) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """The Weyl chamber of lam in X* together with its R-chamber."""
    return system.dual().chamber_of(lam).signs, tuple(sign(dot(lam, omega)) for omega in system.coweight_rays())


def _check_generic(system: RootSystem, lam: Vector) -> None:
    if not system.dual().is_regular(lam) or not system.is_R_regular(lam):
        raise GenericityError(
            f"lambda={[str(c) for c in lam]} is not generic for {system.label}; "
            "choose a point off every R-hyperplane of every wall subsystem"
        )


def _positive_start(system: RootSystem, lam: Vector) -> Chamber:
    """The chamber containing G^-1 lam for a W-invariant gram G; lam > 0 on its closure minus 0."""
    start = system.chamber_of(mat_vec(inverse(system.invariant_gram()), lam))
    if dot(lam, system.chamber_point(start)) <= 0:
        raise DsConesError(f"lambda is not positive on its own chamber in {system.label}")
    return start


def _propagate(system: RootSystem, lam: Vector, rng: Optional[random.Random] = None) -> Dict[Tuple[int, ...], int]:
    start = _positive_start(system, lam)
    values: Dict[Tuple[int, ...], int] = {start.signs: 0}
    frontier: List[Chamber] = [start]
    while frontier:
        c = frontier.pop(rng.randrange(len(frontier)) if rng else 0)
        p = system.chamber_point(c)
        for i in system.simple_indices(c):
            q = system.reflect_point(p, i)
            d = system.chamber_of(q)
            y = scale(Fraction(1, 2), add(p, q))
            value = 2 * _wall_value(system, system.roots[i], y, lam) - values[c.signs]
            if d.signs not in values:
                values[d.signs] = value
                frontier.append(d)
            elif values[d.signs] != value:
                raise DsConesError(
                    f"cbar recursion is path dependent on {system.label}: {values[d.signs]} != {value}"
                )
    return values


def _wall_value(system: RootSystem, alpha: Vector, y: Vector, lam: Vector) -> int:
    wall = subsystem_wall(system, alpha)
    return _cbar(wall.system, wall.point(y), wall.functional(lam))


def _cbar(system: RootSystem, x: Vector, lam: Vector) -> int:
    if system.dim == 0:
        return 1
    _check_generic(system, lam)
    table = cbar_table(system, lam)
    return table[system.chamber_of(x).signs]


def cbar_table(system: RootSystem, lam: Sequence, rng: Optional[random.Random] = None) -> Dict[Tuple[int, ...], int]:
    """
    cbar_R(., lam) on every chamber, keyed by chamber sign vector.

    Cached per system instance, Weyl chamber and R-chamber of lam. Passing
    rng walks the chamber graph in a random order and bypasses the cache.
    """
    lam = vec(lam)
    _check_generic(system, lam)
    if rng is not None:
        return _propagate(system, lam, rng)
    return system.cache_slot(("cbar", _lambda_cell_key(system, lam)), lambda: _propagate(system, lam))


def cbar(system: RootSystem, x: Sequence, lam: Sequence) -> int:
    """
    The stable constant cbar_R(x, lam) from its wall recursion.

    Raises:
        MathPreconditionError: if -1 is not in W.
        NotRegularError: if x is not regular.
        GenericityError: if lam or one of its wall restrictions is not generic.
    """
    x, lam = vec(x), vec(lam)
    _check_dims(system, x, lam)
    if system.dim == 0:
        return 1
    _require_minus_one(system, "cbar")
    if not system.is_regular(x):
        raise NotRegularError(f"x is not regular for {system.label}")
    return _cbar(system, x, lam)


##> ============================================================================
##> D-TABLES
##> ============================================================================

@dataclass
class DTable:
    """d(w) = cbar_R(x0, w lam0) for every w in W."""
    system: RootSystem
    base_chamber: Chamber
    values: Dict[WeylElement, int]
    seed: int
    x0: Vector
    lam0: Vector

    def by_word(self) -> Dict[str, int]:
        return {format_word(w.word): v for w, v in self.values.items()}

    def value(self, word: Sequence[int]) -> int:
        return self.values[self.system.element_from_word(word)]


def d_table(system: RootSystem, c0: Optional[Chamber] = None, seed: Optional[int] = None) -> DTable:
    """
    The d-table of the base chamber c0, via m_R at deep generic points.

    Raises:
        MathPreconditionError: if -1 is not in W.
    """
    _require_minus_one(system, "a d-table")
    c0 = c0 or system.base_chamber
    seed = settings.seed if seed is None else seed
    rng = random.Random(seed)
    x0 = generic_point(system, c0, rng)
    lam0 = generic_functional(system, c0, rng)
    values = {w: m_R(system, x0, w.act_dual(lam0)) for w in system.weyl_group()}
    logger.info("d-table for %s computed over %d elements", system.label, len(values))
    return DTable(system, c0, values, seed, x0, lam0)


def d_vee_table(system: RootSystem, c0: Optional[Chamber] = None, seed: Optional[int] = None) -> DTable:
    """d-table of the coroot system at C0^vee."""
    c0 = c0 or system.base_chamber
    return d_table(system.dual(), c0.dual(), seed)


##> ============================================================================
##> TWISTED SUMS
##> ============================================================================

def twisted_sum_coroot(system: RootSystem, c0: Chamber, chi: SignCharacter, x: Sequence, lam: Sequence) -> int:
    """sum_C eps(C0, C) chi(delta_C - delta_C0) psi_C(x, lam) for chi on the coroot lattice."""
    x, lam = vec(x), vec(lam)
    _check_dims(system, x, lam)
    if not system.is_regular(x):
        raise NotRegularError(f"x is not regular for {system.label}")
    d0 = system.delta(c0)
    return sum(
        system.epsilon(c0, c) * chi(sub(system.delta(c), d0)) * system.chamber_psi(c, x, lam)
        for c in system.chambers()
    )


def twisted_sum_root(system: RootSystem, c0: Chamber, chi: SignCharacter, x: Sequence, lam: Sequence) -> int:
    """sum_C eps(C0, C) chi(rho_C - rho_C0) psi_C(x, lam) for chi on the root lattice."""
    x, lam = vec(x), vec(lam)
    _check_dims(system, x, lam)
    if not system.is_regular(x):
        raise NotRegularError(f"x is not regular for {system.label}")
    r0 = system.rho(c0)
    return sum(
        system.epsilon(c0, c) * chi(sub(system.rho(c), r0)) * system.chamber_psi(c, x, lam)
        for c in system.chambers()
    )


def twisted_subsystem(system: RootSystem, c0: Chamber, chi: SignCharacter, lattice: str) -> Subsystem:
    if lattice == "coroot":
        return subsystem_sign_coroot(system, chi, c0)
    if lattice == "root":
        return subsystem_sign_root(system, chi, c0)
    raise PreconditionError(f"unknown lattice {lattice!r}")


def twisted_prediction(system: RootSystem, c0: Chamber, chi: SignCharacter, lattice: str,
                       x: Sequence, lam: Sequence) -> int:
    """psi of the sign subsystem R_s (or R_a) at the chamber containing C0."""
    sub_system = twisted_subsystem(system, c0, chi, lattice)
    return psi_R(sub_system.system, sub_system.chamber(c0), x, lam)


def character_lifts(system: RootSystem, chi: SignCharacter, lattice: str) -> bool:
    """Whether chi extends to a sign character of P (coroot case) or of the weight lattice (root case)."""
    superlattice = {"coroot": "coweight", "root": "weight"}.get(lattice)
    if superlattice is None:
        raise PreconditionError(f"unknown lattice {lattice!r}")
    return sign_character_lifts(chi, system.lattice_basis(superlattice))


##> ============================================================================
##> INDIVIDUAL CONSTANTS b_R
##> ============================================================================

@dataclass(frozen=True)
class BQuery:
    """(tau, C; x, lambda) for b_R, with tau regular, x R^vee-regular and lambda in W tau."""
    chamber: Chamber
    tau: Vector
    x: Vector
    lam: Vector
    system: RootSystem = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "system", self.chamber.system)
        object.__setattr__(self, "tau", vec(self.tau))
        object.__setattr__(self, "x", vec(self.x))
        object.__setattr__(self, "lam", vec(self.lam))
        _check_dims(self.system, self.tau, self.x, self.lam)
        if not self.system.dual().is_regular(self.tau):
            raise NotRegularError("tau must be regular")
        if not self.system.is_Rvee_regular(self.x):
            raise NotRegularError(f"x must be R^vee-regular for {self.system.label}")


def _two_orbit(system: RootSystem, chamber: Chamber, tau: Vector) -> Set[Vector]:
    """W_C . tau, with W_C the Weyl group of R_C."""
    group = subsystem_two(system, chamber).system.weyl_group()
    return {w.act_dual(tau) for w in group}


def coset(system: RootSystem, chamber: Chamber, tau: Vector, lam: Vector) -> List[WeylElement]:
    """W(tau, C, lam) = {w : w^-1 lam in W_C . tau}."""
    orbit = _two_orbit(system, chamber, tau)
    return [w for w in system.weyl_group() if w.inverse.act_dual(lam) in orbit]


def _check_orbit(system: RootSystem, tau: Vector, lam: Vector) -> None:
    if all(w.act_dual(tau) != lam for w in system.weyl_group()):
        raise OrbitError(f"lambda={[str(c) for c in lam]} is not in the W-orbit of tau")


def b_constant(q: BQuery) -> int:
    """
    b_R(tau, C; x, lam) = (-1)^q(R) sum_{w in W(tau,C,lam)} eps(C_x, wC) psi_{wC^vee}(lam, x).

    Raises:
        OrbitError: if lam is not in W . tau.
        MathPreconditionError: if -1 is not in W.
    """
    system = q.system
    if system.dim == 0:
        return 1
    _require_minus_one(system, "b_R")
    _check_orbit(system, q.tau, q.lam)
    cx = system.chamber_of(q.x)
    dual = system.dual()
    total = 0
    for w in coset(system, q.chamber, q.tau, q.lam):
        wc = w.act_on_chamber(q.chamber)
        total += system.epsilon(cx, wc) * dual.chamber_psi(wc.dual(), q.lam, q.x)
    return (-1) ** system.q_invariant() * total


def _wall_setup(system: RootSystem, chamber: Chamber, alpha: Vector, y: Vector) -> Tuple[Subsystem, Vector]:
    if not chamber.dual().closure_contains(alpha):
        raise PreconditionError("alpha must lie in the closure of C^vee")
    wall = subsystem_wall(system, alpha, chamber)
    y_wall = wall.point(y)
    if not wall.system.is_Rvee_regular(y_wall):
        raise NotRegularError("y must be R_alpha^vee-regular in ker(alpha)")
    return wall, y_wall


def wall_group(system: RootSystem, wall: Subsystem) -> List[WeylElement]:
    """W_alpha as a subgroup of W."""
    on_x = subsystem_on_x(system, wall.indices, f"{system.label}_alpha")
    return [system.element(w.matrix) for w in on_x.system.weyl_group()]


def b_sub(system: RootSystem, tau: Sequence, chamber: Chamber, alpha: Sequence, y: Sequence, lam: Sequence) -> int:
    """
    The wall constant b^R_{R_alpha}(tau, C; y, lam) by the coset formula

        (-1)^q(R_alpha) sum_{w in W_alpha cap W(tau,C,lam)} eps(y, w C_Y) psi_{w C_Y^vee}(lam~, y),

    which is 0 when lam is outside W_alpha W_C . tau.
    """
    tau, alpha, y, lam = vec(tau), vec(alpha), vec(y), vec(lam)
    _check_dims(system, tau, alpha, y, lam)
    _check_orbit(system, tau, lam)
    wall, y_wall = _wall_setup(system, chamber, alpha, y)
    members = set(coset(system, chamber, tau, lam))
    w_alpha = [w for w in wall_group(system, wall) if w in members]
    if not w_alpha:
        return 0
    ws = wall.system
    lam_wall = wall.functional(lam)
    cy = ws.chamber_of(y_wall)
    total = 0
    for w in w_alpha:
        wc = wall.chamber(w.act_on_chamber(chamber))
        total += ws.epsilon(cy, wc) * ws.dual().chamber_psi(wc.dual(), lam_wall, y_wall)
    return (-1) ** ws.q_invariant() * total


def b_sub_via_wall_constant(system: RootSystem, tau: Sequence, chamber: Chamber, alpha: Sequence,
                            y: Sequence, lam: Sequence) -> int:
    """The same wall constant as b_{R_alpha}(tau'~, C_Y; y, lam~) for tau' in W_C tau with lam in W_alpha tau'."""
    tau, alpha, y, lam = vec(tau), vec(alpha), vec(y), vec(lam)
    _check_dims(system, tau, alpha, y, lam)
    _check_orbit(system, tau, lam)
    wall, y_wall = _wall_setup(system, chamber, alpha, y)
    group = wall_group(system, wall)
    for tau_prime in sorted(_two_orbit(system, chamber, tau)):
        if any(u.act_dual(tau_prime) == lam for u in group):
            query = BQuery(wall.chamber(chamber), wall.functional(tau_prime), y_wall, wall.functional(lam))
            return b_constant(query)
    return 0


def compact_chambers(system: RootSystem, compact_roots: Sequence[Sequence]) -> List[Chamber]:
    """Chambers C with R_C equal to the given set of roots."""
    target = {vec(r) for r in compact_roots}
    for r in target:
        system.index_of(r)
    result = []
    for c in system.chambers():
        r_c = subsystem_two(system, c)
        if {system.roots[i] for i in r_c.indices} == target:
            result.append(c)
    return result


def knapp_c(system: RootSystem, compact_roots: Sequence[Sequence], w: WeylElement, lam: Sequence,
            positive_system: Chamber, seed: Optional[int] = None) -> int:
    """
    c(w, lam, Delta+) = b(lam, C; x, w lam), C any chamber with R_C = compact_roots and
    x an R^vee-regular point of the Delta+ chamber.

    Raises:
        PreconditionError: if no chamber has R_C equal to compact_roots.
    """
    lam = vec(lam)
    candidates = compact_chambers(system, compact_roots)
    if not candidates:
        raise PreconditionError("no chamber C has R_C equal to the given compact roots")
    rng = random.Random(settings.seed if seed is None else seed)
    x = generic_point(system, positive_system, rng)
    return b_constant(BQuery(candidates[0], lam, x, w.act_dual(lam)))
