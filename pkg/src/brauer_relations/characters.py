"""Permutation characters and formal integer combinations of subgroup classes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import InvalidInputError, NotNormalError
from .groups import (
    FiniteGroup,
    Subgroup,
    conjugacy_classes,
    is_normal,
    left_cosets,
    subgroup_generated,
    subgroup_generators,
)
from .subgroups import class_of, subgroup_classes

# values indexed by element conjugacy class id
CharacterVector = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class FormalCombination:
    """Integer coefficients on the subgroup conjugacy classes of ``group``.

    Absent class ids have coefficient 0; zero coefficients are never stored.
    """

    group: FiniteGroup
    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        n = len(subgroup_classes(self.group))
        clean = {}
        for cid, c in self.coeffs.items():
            if not 0 <= cid < n:
                raise InvalidInputError(f"class id {cid} out of range 0..{n - 1}")
            if c:
                clean[int(cid)] = int(c)
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def from_vector(cls, group: FiniteGroup, vector) -> FormalCombination:
        return cls(group, dict(enumerate(vector)))

    @classmethod
    def from_subgroups(cls, group: FiniteGroup, terms: Mapping[Subgroup, int]) -> FormalCombination:
        coeffs: dict[int, int] = {}
        for H, c in terms.items():
            cid = class_of(group, H)
            coeffs[cid] = coeffs.get(cid, 0) + c
        return cls(group, coeffs)

    def __getitem__(self, class_id: int) -> int:
        return self.coeffs.get(class_id, 0)

    def __eq__(self, other):
        if not isinstance(other, FormalCombination):
            return NotImplemented
        return self.group is other.group and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.group), tuple(self.coeffs.items())))

    def __repr__(self):
        return f"FormalCombination({self.group.label}, {self.coeffs})"

    def _combine(self, other, sign):
        if other.group is not self.group:
            raise InvalidInputError("combinations over different groups")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + sign * c
        return FormalCombination(self.group, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self * -1

    def __mul__(self, k: int):
        return FormalCombination(self.group, {c: k * v for c, v in self.coeffs.items()})

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def top(self) -> int:
        """Coefficient of the class of the whole group."""
        return self[len(subgroup_classes(self.group)) - 1]

    def vector(self) -> list[int]:
        return [self[i] for i in range(len(subgroup_classes(self.group)))]


def perm_character(G: FiniteGroup, H: Subgroup) -> CharacterVector:
    """Permutation character of G on the left cosets of H.

    The value at g is the number of cosets xH with gxH = xH, i.e. with
    x^-1 g x in H.
    """
    if H.parent is not G:
        raise InvalidInputError("H is not a subgroup of G")

    def compute():
        reps = [c[0] for c in left_cosets(G, H)]
        t, inv = G.table, G.inverse
        values = []
        for cls in conjugacy_classes(G):
            g = cls[0]
            values.append(sum(1 for x in reps if t[t[inv[x]][g]][x] in H))
        return tuple(values)

    return G.memo(("perm_character", H.members), compute)


def combination_character(G: FiniteGroup, R: FormalCombination) -> CharacterVector:
    if R.group is not G:
        raise InvalidInputError("combination is over a different group")
    out = [0] * len(conjugacy_classes(G))
    classes = subgroup_classes(G)
    for cid, c in R.coeffs.items():
        for j, v in enumerate(perm_character(G, classes[cid].representative)):
            out[j] += c * v
    return tuple(out)


def mackey_restrict_normal(G: FiniteGroup, R: FormalCombination, C: Subgroup) -> FormalCombination:
    """Restrict a combination to a normal subgroup C.

    Each term ``n_H * H`` contributes ``n_H`` copies of ``g(H ∩ C)g^-1`` for
    every coset ``g HC`` of G, so ``[G:HC]`` terms in all; for cyclic C these
    conjugates all equal ``H ∩ C``.  The result is a combination over
    ``C.as_group()``, whose index ``i`` is the element ``C.members[i]`` of G.
    """
    if R.group is not G or C.parent is not G:
        raise InvalidInputError("combination and subgroup must belong to G")
    if not is_normal(G, C):
        raise NotNormalError("Mackey restriction is implemented for normal subgroups only")
    CG = G.memo(("as_group", C.members), C.as_group)
    pos = {x: i for i, x in enumerate(C.members)}
    classes = subgroup_classes(G)
    coeffs: dict[int, int] = {}
    for cid, n in R.coeffs.items():
        H = classes[cid].representative
        inter = H.intersection(C)
        HC = subgroup_generated(G, subgroup_generators(H) + subgroup_generators(C))
        for coset in left_cosets(G, HC):
            g = coset[0]
            local = Subgroup(CG, tuple(sorted(pos[G.conj(g, x)] for x in inter)))
            k = class_of(CG, local)
            coeffs[k] = coeffs.get(k, 0) + n
    return FormalCombination(CG, coeffs)
