from __future__ import annotations

import logging
from dataclasses import dataclass

from .characters import FormalCombination
from .classify import Classification, Kind, classify, predicted_ideal
from .errors import BrauerError
from .groups import FiniteGroup
from .relations import coefficient_ideal, is_brauer_relation, minimal_top_relation, solomon_relation

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TheoremReport:
    label: str
    classification: Classification
    predicted_d: int
    computed_d: int
    witness: FormalCombination | None
    passed: bool
    trace: tuple[str, ...] = ()
    problem: str | None = None


def verify_theorem(G: FiniteGroup, label: str | None = None) -> TheoremReport:
    """Check the predicted coefficient ideal against the computed one.

    Mismatches and failed witness constructions are reported in the result,
    never raised.
    """
    c = classify(G)
    predicted = predicted_ideal(c)
    computed = coefficient_ideal(G)
    witness = None
    trace: list[str] = []
    problem = None
    if computed > 0:
        try:
            if c.kind is Kind.P_QUASI_ELEMENTARY:
                witness = solomon_relation(G, trace)
            else:
                witness = minimal_top_relation(G)
        except (BrauerError, AssertionError) as exc:
            log.warning("witness construction failed for %s: %s", label or G.label, exc)
            problem = f"witness construction failed: {exc}"

    passed = predicted == computed
    if predicted != computed:
        problem = f"predicted d = {predicted}, computed d = {computed}"
    elif computed > 0:
        if witness is None:
            passed = False
        elif witness.top != computed or not is_brauer_relation(G, witness):
            passed = False
            problem = "witness is not a relation with n_G = d"
    return TheoremReport(label or G.label, c, predicted, computed, witness, passed,
                         tuple(trace), problem)
