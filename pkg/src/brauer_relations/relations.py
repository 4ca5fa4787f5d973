"""Brauer relations: the integer kernel of the induction matrix and friends.

A Brauer relation in G is a combination ``sum n_H H`` of subgroup classes
whose permutation characters ``Ind_H^G 1`` cancel.  Everything here is exact
integer arithmetic.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd

from .characters import FormalCombination, combination_character, perm_character
from .classify import is_p_quasi_elementary
from .errors import InvalidInputError, NotARelationError, NotQuasiElementaryError
from .groups import (
    FiniteGroup,
    Homomorphism,
    Subgroup,
    conjugation_kernel,
    frattini_subgroup,
    is_cyclic_group,
    is_prime,
    make_semidirect_cyclic,
    p_residual,
    prime_factors,
    prime_power_exponent,
    quotient_map,
    subgroup_generated,
    subgroup_generators,
    sylow_subgroup,
)
from .linalg import left_kernel, xgcd_combination
from .subgroups import class_of, preimage_subgroup, subgroup_classes

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class InductionMatrix:
    """Rows: subgroup classes.  Columns: element conjugacy classes."""

    group: FiniteGroup
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])


@dataclass(frozen=True)
class RelationLattice:
    group: FiniteGroup
    basis: tuple[FormalCombination, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)


def induction_matrix(G: FiniteGroup) -> InductionMatrix:
    def compute():
        rows = tuple(perm_character(G, c.representative) for c in subgroup_classes(G))
        return InductionMatrix(G, rows)

    return G.memo("induction_matrix", compute)


def relation_lattice(G: FiniteGroup) -> RelationLattice:
    """Integral basis of all Brauer relations, in Hermite normal form."""

    def compute():
        kernel = left_kernel(induction_matrix(G).rows)
        return RelationLattice(G, tuple(FormalCombination.from_vector(G, v) for v in kernel))

    return G.memo("relation_lattice", compute)


def is_brauer_relation(G: FiniteGroup, R: FormalCombination) -> bool:
    return not any(combination_character(G, R))


def coefficient_ideal(G: FiniteGroup) -> int:
    """The d >= 0 with {n_G over all relations} = dZ."""
    return gcd(*(R.top for R in relation_lattice(G).basis))


def minimal_top_relation(G: FiniteGroup) -> FormalCombination | None:
    """A relation whose coefficient on G is the positive generator of the
    coefficient ideal, or None when that ideal is zero."""
    basis = relation_lattice(G).basis
    d, coeffs = xgcd_combination([R.top for R in basis])
    if d == 0:
        return None
    R = FormalCombination(G, {})
    for c, B in zip(coeffs, basis):
        if c:
            R = R + c * B
    return R


def lift_relation(phi: Homomorphism, R_Q: FormalCombination) -> FormalCombination:
    """Pull a relation on G/N back to G along the quotient map ``phi``."""
    Q, G = phi.target, phi.source
    if R_Q.group is not Q:
        raise InvalidInputError("relation is not over the target of phi")
    if not is_brauer_relation(Q, R_Q):
        raise NotARelationError("only Brauer relations can be lifted")
    classes = subgroup_classes(Q)
    terms: dict[int, int] = {}
    for cid, n in R_Q.coeffs.items():
        k = class_of(G, preimage_subgroup(phi, classes[cid].representative))
        terms[k] = terms.get(k, 0) + n
    return FormalCombination(G, terms)


# ---------------------------------------------------------------------------
# the explicit relation in C_l ⋊ C_{p^k}


@dataclass(frozen=True)
class BaseCaseParams:
    l: int
    p: int
    k: int

    def __post_init__(self):
        if not (is_prime(self.l) and is_prime(self.p)):
            raise InvalidInputError(f"l={self.l} and p={self.p} must be primes")
        if self.k < 1:
            raise InvalidInputError(f"k={self.k} must be positive")
        if self.l == 2 or self.p == self.l:
            raise InvalidInputError("need an odd prime l different from p")
        if (self.l - 1) % self.p**self.k:
            raise InvalidInputError(f"{self.p}^{self.k} does not divide l-1 = {self.l - 1}")

    def group(self) -> FiniteGroup:
        """C_l ⋊ C_{p^k} with a faithful action."""
        m = self.p**self.k
        a = next(a for a in range(2, self.l) if _mult_order(a, self.l) == m)
        return make_semidirect_cyclic(self.l, m, a)


def _mult_order(a: int, n: int) -> int:
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def base_relation(G: FiniteGroup, params: BaseCaseParams) -> FormalCombination:
    """``C_{p^(k-1)} - p C_{p^k} - C_l ⋊ C_{p^(k-1)} + p G`` for G = C_l ⋊ C_{p^k}."""
    l, p, k = params.l, params.p, params.k
    if G.order != l * p**k:
        raise InvalidInputError(f"|G| = {G.order} != {l}*{p}^{k}")
    C = p_residual(G, p)
    P = sylow_subgroup(G, p)
    if C.order != l or not is_cyclic_group(P):
        raise InvalidInputError(f"G is not of the shape C_{l} ⋊ C_{p}^{k}")
    if not conjugation_kernel(G, P, C).is_trivial():
        raise InvalidInputError("the action of P on C is not faithful")
    P1 = subgroup_generated(G, [G.power(x, p) for x in subgroup_generators(P)])
    CP1 = subgroup_generated(G, list(subgroup_generators(C)) + list(subgroup_generators(P1)))
    whole = subgroup_generated(G, G.generators)
    return FormalCombination.from_subgroups(G, {P1: 1, P: -p, CP1: -1, whole: p})


# ---------------------------------------------------------------------------
# constructive relation with n_G = p


class Step:
    FRATTINI = "frattini"       # P not cyclic: quotient by C·Φ(P)
    KERNEL = "kernel"           # P acts on C with a kernel: quotient by it
    COPRIME = "coprime"         # |C| not a prime power: quotient by a Sylow of C
    PRIME_POWER = "prime-power"  # |C| = l^k, k > 1: quotient by the index-l subgroup
    BASE = "base"
    LATTICE = "lattice"


def solomon_relation(G: FiniteGroup, trace: list[str] | None = None) -> FormalCombination:
    """A Brauer relation with coefficient exactly p on G, built by quotient
    reduction down to C_l ⋊ C_{p^k}.

    G must be p-quasi-elementary and not cyclic.  The reduction steps taken are
    appended to ``trace`` if given.  Elementary abelian p-groups, where no
    further quotient is available, take their relation from the lattice.
    """
    if is_cyclic_group(G):
        raise NotQuasiElementaryError("cyclic groups have no relation with n_G != 0")
    p = next((p for p in prime_factors(G.order) if is_p_quasi_elementary(G, p)), None)
    if p is None:
        raise NotQuasiElementaryError(f"{G.label or 'group'} is not quasi-elementary")
    return _reduce(G, p, [] if trace is None else trace)


def _via_quotient(G, N, p, trace, step):
    trace.append(step)
    phi = quotient_map(G, N)
    log.debug("%s: %s -> quotient of order %d", step, G.label, phi.target.order)
    return lift_relation(phi, _reduce(phi.target, p, trace))


def _reduce(G: FiniteGroup, p: int, trace: list[str]) -> FormalCombination:
    C = p_residual(G, p)
    P = sylow_subgroup(G, p)

    if not is_cyclic_group(P):
        N = subgroup_generated(G, list(subgroup_generators(C))
                               + list(subgroup_generators(frattini_subgroup(P, p))))
        if not N.is_trivial():
            return _via_quotient(G, N, p, trace, Step.FRATTINI)
        # G is elementary abelian of rank > 1
        trace.append(Step.LATTICE)
        R = minimal_top_relation(G)
        if R is None or R.top != p:
            raise AssertionError(f"lattice fallback gave n_G = {R and R.top}, expected {p}")
        return R

    K = conjugation_kernel(G, P, C)
    if not K.is_trivial():
        return _via_quotient(G, K, p, trace, Step.KERNEL)

    primes = prime_factors(C.order)
    if len(primes) > 1:
        orders = G.element_orders
        for l in primes:
            U = subgroup_generated(G, [x for x in C if prime_power_exponent(orders[x], l) is not None])
            if not is_cyclic_group(quotient_map(G, U).target):
                return _via_quotient(G, U, p, trace, Step.COPRIME)
        raise AssertionError("no Sylow factor of C leaves a non-cyclic quotient")

    (l,) = primes
    k = prime_power_exponent(C.order, l)
    if k > 1:
        U = subgroup_generated(G, [G.power(x, l) for x in subgroup_generators(C)])
        return _via_quotient(G, U, p, trace, Step.PRIME_POWER)

    trace.append(Step.BASE)
    return base_relation(G, BaseCaseParams(l, p, prime_power_exponent(P.order, p)))


def mackey_obstruction(G: FiniteGroup, R: FormalCombination, p: int) -> int:
    """Sum of ``n_H [G:H]`` over the classes of subgroups H containing C.

    C is the p-residual of G.  Zero for every Brauer relation; every term but
    the one for G itself is divisible by p.
    """
    if not is_p_quasi_elementary(G, p):
        raise NotQuasiElementaryError(f"G is not {p}-quasi-elementary")
    if R.group is not G:
        raise InvalidInputError("combination is over a different group")
    C = p_residual(G, p)
    classes = subgroup_classes(G)
    return sum(n * classes[cid].representative.index
               for cid, n in R.coeffs.items()
               if C.issubset(classes[cid].representative))
