"""Subgroup enumeration, conjugacy classes of subgroups, preimages."""

from __future__ import annotations

from dataclasses import dataclass

from .groups import (
    FiniteGroup,
    Homomorphism,
    MAX_ORDER,
    Subgroup,
    closure,
    conjugation_kernel,
    subgroup_generators,
)
from .errors import GroupTooLargeError, InvalidInputError

__all__ = [
    "SubgroupClass",
    "all_subgroups",
    "subgroup_classes",
    "class_of",
    "preimage_subgroup",
    "conjugation_kernel",
]


@dataclass(frozen=True)
class SubgroupClass:
    representative: Subgroup
    class_size: int
    class_id: int

    @property
    def order(self) -> int:
        return self.representative.order


def _mask(members) -> int:
    m = 0
    for x in members:
        m |= 1 << x
    return m


def _members(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every subgroup of G, sorted by order then member tuple.

    Starts from the cyclic subgroups and closes under joins with a cyclic
    subgroup until nothing new appears.  Every subgroup is the join of its
    cyclic subgroups, so the fixed point is the full lattice.
    """
    if G.order > MAX_ORDER:
        raise GroupTooLargeError(G.order, MAX_ORDER)

    def compute():
        cyclic: dict[int, int] = {}  # mask -> generator
        for g in range(G.order):
            m = _mask(closure(G, [g]))
            cyclic.setdefault(m, g)
        known: dict[int, list[int]] = {m: [g] for m, g in cyclic.items()}
        queue = list(known)
        cyc = list(cyclic.items())
        while queue:
            h = queue.pop()
            gens = known[h]
            for cm, g in cyc:
                if cm & ~h == 0:
                    continue
                members = closure(G, gens + [g])
                m = _mask(members)
                if m not in known:
                    known[m] = gens + [g]
                    queue.append(m)
        subs = [Subgroup(G, _members(m)) for m in known]
        subs.sort(key=lambda H: (H.order, H.members))
        return subs

    return G.memo("all_subgroups", compute)


def _conjugate_mask(G: FiniteGroup, g: int, members) -> int:
    t, inv = G.table, G.inverse[g]
    row = t[g]
    m = 0
    for x in members:
        m |= 1 << t[row[x]][inv]
    return m


def _classes(G: FiniteGroup):
    def compute():
        subs = all_subgroups(G)
        by_mask = {H.mask: H for H in subs}
        assigned: dict[int, int] = {}
        orbits = []
        for H in subs:
            if H.mask in assigned:
                continue
            orbit = [H.mask]
            assigned[H.mask] = -1
            if not G.is_abelian:
                for m in orbit:
                    K = by_mask[m]
                    for g in G.generators:
                        c = _conjugate_mask(G, g, K.members)
                        if c not in assigned:
                            assigned[c] = -1
                            orbit.append(c)
            rep = min((by_mask[m] for m in orbit), key=lambda K: K.members)
            orbits.append((rep, orbit))
        orbits.sort(key=lambda ro: (ro[0].order, ro[0].members))
        classes = []
        lookup = {}
        for cid, (rep, orbit) in enumerate(orbits):
            classes.append(SubgroupClass(rep, len(orbit), cid))
            for m in orbit:
                lookup[m] = cid
        return classes, lookup

    return G.memo("subgroup_classes", compute)


def subgroup_classes(G: FiniteGroup) -> list[SubgroupClass]:
    """Conjugacy classes of subgroups.

    Ordered by subgroup order, then by the member tuple of the least conjugate,
    which is also the representative.  Class 0 is the trivial subgroup and the
    last class is G.
    """
    return _classes(G)[0]


def class_of(G: FiniteGroup, H: Subgroup) -> int:
    """Class id of the conjugacy class containing H."""
    if H.parent is not G:
        raise InvalidInputError("subgroup belongs to a different group")
    try:
        return _classes(G)[1][H.mask]
    except KeyError:
        raise InvalidInputError("not a subgroup of G") from None


def preimage_subgroup(phi: Homomorphism, U: Subgroup) -> Subgroup:
    if U.parent is not phi.target:
        raise InvalidInputError("U is not a subgroup of the homomorphism's target")
    return Subgroup(phi.source, tuple(x for x, y in enumerate(phi.image) if y in U))


def is_subgroup(G: FiniteGroup, members) -> bool:
    s = set(members)
    if 0 not in s:
        return False
    t = G.table
    return all(t[a][b] in s for a in s for b in s)

