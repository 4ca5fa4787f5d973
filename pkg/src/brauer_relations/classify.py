"""Cyclic / p-quasi-elementary / not quasi-elementary classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .groups import FiniteGroup, Subgroup, is_cyclic_group, p_residual, prime_factors, sylow_subgroup


class Kind(str, enum.Enum):
    CYCLIC = "Cyclic"
    P_QUASI_ELEMENTARY = "PQuasiElementary"
    NOT_QUASI_ELEMENTARY = "NotQuasiElementary"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    p: int | None = None
    C: Subgroup | None = None
    P: Subgroup | None = None

    def __str__(self):
        if self.kind is Kind.P_QUASI_ELEMENTARY:
            return f"{self.p}-quasi-elementary (|C| = {self.C.order}, |P| = {self.P.order})"
        return {Kind.CYCLIC: "cyclic", Kind.NOT_QUASI_ELEMENTARY: "not quasi-elementary"}[self.kind]


def is_p_quasi_elementary(G: FiniteGroup, p: int) -> bool:
    """True iff G has a cyclic normal subgroup of p-power index.

    That holds exactly when the p-residual, the least normal subgroup with a
    p-group quotient, is cyclic.
    """
    return is_cyclic_group(p_residual(G, p))


def classify(G: FiniteGroup) -> Classification:
    if is_cyclic_group(G):
        return Classification(Kind.CYCLIC)
    for p in prime_factors(G.order):
        C = p_residual(G, p)
        if is_cyclic_group(C):
            return Classification(Kind.P_QUASI_ELEMENTARY, p, C, sylow_subgroup(G, p))
    return Classification(Kind.NOT_QUASI_ELEMENTARY)


def predicted_ideal(c: Classification) -> int:
    if c.kind is Kind.CYCLIC:
        return 0
    if c.kind is Kind.P_QUASI_ELEMENTARY:
        return c.p
    return 1
