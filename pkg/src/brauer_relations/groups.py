"""Small finite groups stored as dense multiplication tables.

Elements are the indices ``0 .. order-1`` with ``0`` the identity.  Groups are
immutable once built; derived data (inverses, element orders, subgroup
lattices, ...) is memoized on the instance the first time it is asked for.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .errors import GroupTooLargeError, InvalidInputError, NotNormalError

MAX_ORDER = 2000

Perm = tuple[int, ...]


class FiniteGroup:
    """A fully enumerated finite group.

    ``table[i][j]`` is the index of the product ``i*j``.  ``elements`` holds an
    optional concrete description of each index (a permutation, an exponent
    pair, ...) used only for display.
    """

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        generators: Iterable[int] = (),
        label: str = "",
        elements: Sequence[object] | None = None,
    ):
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        if self.order == 0:
            raise InvalidInputError("a group has at least one element")
        self.generators = tuple(g for g in generators if g != 0)
        self.label = label
        self.elements = tuple(elements) if elements is not None else None
        self._memo: dict = {}

    def __repr__(self):
        return f"FiniteGroup({self.label or '?'}, order={self.order})"

    def __len__(self):
        return self.order

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        result = 0
        row = self.table
        while k:
            if k & 1:
                result = row[result][a]
            a = row[a][a]
            k >>= 1
        return result

    def conj(self, g: int, x: int) -> int:
        """Return ``g x g^-1``."""
        return self.table[self.table[g][x]][self.inverse[g]]

    def commutator(self, a: int, b: int) -> int:
        inv = self.inverse
        t = self.table
        return t[t[t[a][b]][inv[a]]][inv[b]]

    @cached_property
    def inverse(self) -> tuple[int, ...]:
        inv = [0] * self.order
        for a, row in enumerate(self.table):
            inv[a] = row.index(0)
        return tuple(inv)

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = []
        for g in range(self.order):
            k, x = 1, g
            while x != 0:
                x = self.table[x][g]
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        gens = self.generators
        return all(t[a][b] == t[b][a] for a in gens for b in gens)

    def memo(self, key, compute: Callable[[], object]):
        """Cache ``compute()`` on this group under ``key``."""
        try:
            return self._memo[key]
        except KeyError:
            value = self._memo[key] = compute()
            return value

    def check_axioms(self) -> None:
        """Exhaustively verify identity, inverses, associativity and generation.

        Raises ``InvalidInputError`` on the first violation.
        """
        n = self.order
        t = self.table
        for a in range(n):
            if t[0][a] != a or t[a][0] != a:
                raise InvalidInputError(f"index 0 is not an identity (fails at {a})")
            row = t[a]
            if sorted(row) != list(range(n)):
                raise InvalidInputError(f"row {a} is not a permutation")
            if 0 not in row or t[row.index(0)][a] != 0:
                raise InvalidInputError(f"element {a} has no two-sided inverse")
        for a in range(n):
            ta = t[a]
            for b in range(n):
                tab = t[ta[b]]
                tb = t[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise InvalidInputError(f"not associative at ({a}, {b}, {c})")
        if len(closure(self, self.generators)) != n:
            raise InvalidInputError("generators do not generate the group")


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup of ``parent`` given by its sorted member indices."""

    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "_set", frozenset(self.members))

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.members == other.members

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.parent!r})"

    def __contains__(self, x: int) -> bool:
        return x in self._set

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    @property
    def mask(self) -> int:
        m = 0
        for x in self.members:
            m |= 1 << x
        return m

    def issubset(self, other: Subgroup) -> bool:
        return self._set <= other._set

    def intersection(self, other: Subgroup) -> Subgroup:
        return Subgroup(self.parent, tuple(sorted(self._set & other._set)))

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def as_group(self) -> FiniteGroup:
        """Re-index this subgroup as a standalone group.

        Index ``i`` of the result corresponds to ``members[i]``; identity stays
        at 0 since ``members`` is sorted.
        """
        pos = {x: i for i, x in enumerate(self.members)}
        t = self.parent.table
        table = [[pos[t[a][b]] for b in self.members] for a in self.members]
        gens = _small_generating_set(self.parent, self.members)
        labels = None
        if self.parent.elements is not None:
            labels = [self.parent.elements[x] for x in self.members]
        G = FiniteGroup(table, [pos[g] for g in gens], label=f"subgroup of {self.parent.label}",
                        elements=labels)
        G._memo["embedding"] = self.members
        return G


@dataclass(frozen=True)
class Homomorphism:
    """A map of groups given by the image of every source index."""

    source: FiniteGroup
    target: FiniteGroup
    image: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.image[x]

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, tuple(x for x, y in enumerate(self.image) if y == 0))

    def is_homomorphism(self) -> bool:
        s, t, f = self.source.table, self.target.table, self.image
        n = self.source.order
        return all(f[s[a][b]] == t[f[a]][f[b]] for a in range(n) for b in range(n))

    def is_surjective(self) -> bool:
        return len(set(self.image)) == self.target.order


# ---------------------------------------------------------------------------
# constructions


def _check_order(order: int, bound: int = MAX_ORDER) -> None:
    if order > bound:
        raise GroupTooLargeError(order, bound)


def make_cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidInputError(f"cyclic group order must be positive, got {n}")
    _check_order(n)
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, [1] if n > 1 else [], label=f"C{n}", elements=range(n))


def make_semidirect_cyclic(n: int, m: int, a: int) -> FiniteGroup:
    """C_n ⋊ C_m where the generator y of C_m acts by y x y^-1 = x^a.

    The element x^i y^j has index ``i + n*j``.
    """
    if n < 1 or m < 1:
        raise InvalidInputError(f"sd({n},{m},{a}): orders must be positive")
    if math.gcd(a, n) != 1:
        raise InvalidInputError(f"sd({n},{m},{a}): gcd(a, n) = {math.gcd(a, n)} != 1")
    if pow(a, m, n) != 1 % n:
        raise InvalidInputError(f"sd({n},{m},{a}): a^m = {pow(a, m, n)} != 1 mod {n}")
    _check_order(n * m)
    apow = [pow(a, j, n) for j in range(m)]
    order = n * m
    table = [[0] * order for _ in range(order)]
    for j1 in range(m):
        s = apow[j1]
        for i1 in range(n):
            row = table[i1 + n * j1]
            for j2 in range(m):
                j = (j1 + j2) % m
                for i2 in range(n):
                    row[i2 + n * j2] = (i1 + i2 * s) % n + n * j
    gens = [g for g in (1 % n, n % order) if g]
    elements = [(i, j) for j in range(m) for i in range(n)]
    return FiniteGroup(table, gens, label=f"sd({n},{m},{a})", elements=elements)


def make_direct_product(G1: FiniteGroup, G2: FiniteGroup) -> FiniteGroup:
    """G1 × G2 with (g1, g2) at index ``g1 + |G1|*g2``."""
    n1, n2 = G1.order, G2.order
    _check_order(n1 * n2)
    t1, t2 = G1.table, G2.table
    table = []
    for b in range(n2):
        for a in range(n1):
            r1, r2 = t1[a], t2[b]
            table.append([r1[c] + n1 * r2[d] for d in range(n2) for c in range(n1)])
    gens = [g for g in G1.generators] + [n1 * h for h in G2.generators]
    elements = [(a, b) for b in range(n2) for a in range(n1)]
    return FiniteGroup(table, gens, label=f"{G1.label} x {G2.label}", elements=elements)


def perm_from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> Perm:
    """Build a permutation of ``range(degree)`` from 1-based cycles.

    Cycles are composed right to left, so ``[(1, 2), (2, 3)]`` applies (2 3)
    first.
    """
    perm = list(range(degree))
    for cycle in reversed(list(cycles)):
        pts = [c - 1 for c in cycle]
        if any(not 0 <= x < degree for x in pts):
            raise InvalidInputError(f"cycle {tuple(cycle)} has points outside 1..{degree}")
        if len(set(pts)) != len(pts):
            raise InvalidInputError(f"cycle {tuple(cycle)} repeats a point")
        step = {pts[i]: pts[(i + 1) % len(pts)] for i in range(len(pts))}
        perm = [step.get(x, x) for x in perm]
    return tuple(perm)


def from_permutations(degree: int, gens: Iterable[Sequence[int]], label: str = "",
                      max_order: int = MAX_ORDER) -> FiniteGroup:
    """Enumerate the permutation group generated by ``gens``.

    Each generator is an image tuple on ``range(degree)``.  Products compose
    right to left: ``(p*q)[x] = p[q[x]]``.
    """
    if degree < 1:
        raise InvalidInputError(f"degree must be positive, got {degree}")
    ident = tuple(range(degree))
    gperms = []
    for g in gens:
        g = tuple(g)
        if len(g) != degree or sorted(g) != list(ident):
            raise InvalidInputError(f"{g} is not a permutation of {degree} points")
        if g != ident and g not in gperms:
            gperms.append(g)

    elements = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gperms:
            y = tuple(x[i] for i in g)  # x∘g
            if y not in index:
                if len(elements) >= max_order:
                    raise GroupTooLargeError(len(elements) + 1, max_order)
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)

    table = [[index[tuple(p[i] for i in q)] for q in elements] for p in elements]
    return FiniteGroup(table, [index[g] for g in gperms], label=label or f"perm({degree})",
                       elements=elements)


def make_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n."""
    if n < 1:
        raise InvalidInputError(f"dihedral parameter must be positive, got {n}")
    G = make_semidirect_cyclic(n, 2, (n - 1) % n if n > 1 else 0)
    G.label = f"D{n}"
    return G


def make_symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidInputError(f"symmetric degree must be positive, got {n}")
    _check_order(math.factorial(n))
    gens = []
    if n > 1:
        gens = [perm_from_cycles(n, [(1, 2)]), perm_from_cycles(n, [tuple(range(1, n + 1))])]
    return from_permutations(n, gens, label=f"S{n}")


def make_alternating(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidInputError(f"alternating degree must be positive, got {n}")
    _check_order(max(1, math.factorial(n) // 2))
    gens = [perm_from_cycles(n, [(1, 2, k)]) for k in range(3, n + 1)]
    return from_permutations(n, gens, label=f"A{n}")


def make_quaternion8() -> FiniteGroup:
    # units 1, i, j, k as 0..3, sign bit in 4; regular action on the 8 units
    unit_mul = {
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }

    def mul(x, y):
        sign, u = unit_mul[x % 4, y % 4]
        return u + 4 * ((x // 4 + y // 4 + sign) % 2)

    i_perm = tuple(mul(1, y) for y in range(8))
    j_perm = tuple(mul(2, y) for y in range(8))
    return from_permutations(8, [i_perm, j_perm], label="Q8")


# ---------------------------------------------------------------------------
# element-level operations


def element_order(G: FiniteGroup, g: int) -> int:
    if not 0 <= g < G.order:
        raise InvalidInputError(f"{g} is not an element index of {G!r}")
    return G.element_orders[g]


def closure(G: FiniteGroup, gens: Iterable[int]) -> list[int]:
    """Members of the subgroup generated by ``gens``, in discovery order."""
    gens = [g for g in dict.fromkeys(gens) if g != 0]
    members = [0]
    seen = {0}
    t = G.table
    for x in members:
        row = t[x]
        for g in gens:
            y = row[g]
            if y not in seen:
                seen.add(y)
                members.append(y)
    return members


def subgroup_generated(G: FiniteGroup, S: Iterable[int]) -> Subgroup:
    S = list(S)
    if any(not 0 <= s < G.order for s in S):
        raise InvalidInputError("generating set contains an invalid element index")
    return Subgroup(G, tuple(sorted(closure(G, S))))


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,))


def _small_generating_set(G: FiniteGroup, members: Sequence[int]) -> list[int]:
    """Greedy generating set: add the first member not yet generated."""
    target = len(members)
    gens: list[int] = []
    current = {0}
    for x in members:
        if len(current) == target:
            break
        if x not in current:
            gens.append(x)
            current = set(closure(G, gens))
    return gens


def subgroup_generators(H: Subgroup) -> list[int]:
    return H.parent.memo(("gens", H.members), lambda: _small_generating_set(H.parent, H.members))


def as_subgroup(H: Subgroup | FiniteGroup) -> Subgroup:
    return whole_group(H) if isinstance(H, FiniteGroup) else H


def conjugacy_classes(G: FiniteGroup) -> list[tuple[int, ...]]:
    """Element conjugacy classes, identity class first, then by least member."""

    def compute():
        label = [-1] * G.order
        classes = []
        for x in range(G.order):
            if label[x] >= 0:
                continue
            orbit = [x]
            label[x] = len(classes)
            for y in orbit:
                for g in G.generators:
                    z = G.conj(g, y)
                    if label[z] < 0:
                        label[z] = len(classes)
                        orbit.append(z)
            classes.append(tuple(sorted(orbit)))
        return classes

    return G.memo("conjugacy_classes", compute)


def class_index(G: FiniteGroup) -> tuple[int, ...]:
    """Map element index -> conjugacy class id."""

    def compute():
        label = [0] * G.order
        for i, cls in enumerate(conjugacy_classes(G)):
            for x in cls:
                label[x] = i
        return tuple(label)

    return G.memo("class_index", compute)


def is_normal(G: FiniteGroup, N: Subgroup) -> bool:
    return all(G.conj(g, x) in N for g in G.generators for x in subgroup_generators(N))


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    gens = subgroup_generators(H)
    return Subgroup(G, tuple(g for g in range(G.order) if all(G.conj(g, h) in H for h in gens)))


def is_cyclic_group(H: Subgroup | FiniteGroup) -> bool:
    H = as_subgroup(H)
    orders = H.parent.element_orders
    return any(orders[x] == H.order for x in H)


def left_cosets(G: FiniteGroup, H: Subgroup) -> list[tuple[int, ...]]:
    """Left cosets xH, each sorted, ordered by least member."""
    seen = [False] * G.order
    cosets = []
    for x in range(G.order):
        if seen[x]:
            continue
        row = G.table[x]
        coset = tuple(sorted(row[h] for h in H))
        for y in coset:
            seen[y] = True
        cosets.append(coset)
    return cosets


def quotient_map(G: FiniteGroup, N: Subgroup) -> Homomorphism:
    """The projection G -> G/N, with G/N realized on the left cosets of N."""
    if N.parent is not G:
        raise InvalidInputError("N is not a subgroup of G")
    if not is_normal(G, N):
        raise NotNormalError("quotient by a subgroup that is not normal")
    cosets = left_cosets(G, N)
    which = [0] * G.order
    for i, c in enumerate(cosets):
        for x in c:
            which[x] = i
    reps = [c[0] for c in cosets]

    def action(g):
        row = G.table[g]
        return tuple(which[row[r]] for r in reps)

    label = f"{G.label}/N{N.order}" if G.label else ""
    Q = from_permutations(len(cosets), [action(g) for g in G.generators], label=label)
    lookup = {p: i for i, p in enumerate(Q.elements)}
    image = tuple(lookup[action(g)] for g in range(G.order))
    return Homomorphism(G, Q, image)


# ---------------------------------------------------------------------------
# characteristic subgroups


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


def prime_power_exponent(n: int, p: int) -> int | None:
    """Return k with n == p**k, or None."""
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k if n == 1 else None


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise InvalidInputError(f"{p} is not prime")


def p_residual(G: FiniteGroup, p: int) -> Subgroup:
    """Subgroup generated by the elements of order prime to p."""
    _require_prime(p)
    orders = G.element_orders
    return subgroup_generated(G, (x for x in range(G.order) if orders[x] % p))


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown one p-element at a time inside normalizers."""
    _require_prime(p)
    target = 1
    while G.order % (target * p) == 0:
        target *= p
    orders = G.element_orders
    H = trivial_subgroup(G)
    while H.order < target:
        N = normalizer(G, H)
        g = next(x for x in N if x not in H and prime_power_exponent(orders[x], p) is not None)
        H = subgroup_generated(G, list(subgroup_generators(H)) + [g])
    return H


def frattini_subgroup(P: Subgroup | FiniteGroup, p: int) -> Subgroup:
    """Frattini subgroup of a p-group: commutators and p-th powers."""
    _require_prime(p)
    P = as_subgroup(P)
    if prime_power_exponent(P.order, p) is None:
        raise InvalidInputError(f"subgroup of order {P.order} is not a {p}-group")
    G = P.parent
    gens = {G.power(a, p) for a in P}
    gens.update(G.commutator(a, b) for a in P for b in P)
    return subgroup_generated(G, gens)


def conjugation_kernel(G: FiniteGroup, P: Subgroup, C: Subgroup) -> Subgroup:
    """Elements of P acting trivially on C by conjugation."""
    cgens = subgroup_generators(C)
    pgens = subgroup_generators(P)
    if not all(G.conj(x, c) in C for x in pgens for c in cgens):
        raise InvalidInputError("P does not normalize C")
    return Subgroup(G, tuple(x for x in P if all(G.conj(x, c) == c for c in cgens)))
