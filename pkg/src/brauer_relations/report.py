"""Human and JSON renderings of classifications, lattices and theorem checks."""

from __future__ import annotations

from collections import Counter

from .characters import FormalCombination
from .classify import Classification, Kind
from .groups import FiniteGroup, Subgroup, closure, is_cyclic_group, prime_power_exponent
from .subgroups import subgroup_classes
from .theorem import TheoremReport


def _structure_tag(H: Subgroup) -> str | None:
    G = H.parent
    n = H.order
    orders = G.element_orders
    if is_cyclic_group(H):
        return f"C{n}"
    abelian = all(G.mul(a, b) == G.mul(b, a) for a in H for b in H)
    if abelian:
        p = next(d for d in range(2, n + 1) if n % d == 0)
        k = prime_power_exponent(n, p)
        if k and all(orders[x] in (1, p) for x in H):
            return f"C{p}^{k}"
        return None
    if n == 8 and sum(orders[x] == 2 for x in H) == 1:
        return "Q8"
    half = n // 2
    if n % 2 == 0 and half >= 3:
        rotations = [x for x in H if orders[x] == half]
        if rotations:
            R = set(closure(G, [rotations[0]]))
            if all(orders[x] == 2 for x in H if x not in R):
                return f"D{half}"
    return None


def class_labels(G: FiniteGroup) -> list[str]:
    """Readable names for the subgroup classes of G.

    ``{1}`` and ``G`` for the extremes, a structure tag (``C6``, ``C2^2``,
    ``D5``, ``Q8``) where recognized, else ``H<order>``.  Ambiguous or
    unrecognized names get a ``#<class_id>`` suffix.
    """

    def compute():
        classes = subgroup_classes(G)
        labels = []
        for c in classes:
            H = c.representative
            if H.is_trivial():
                labels.append("{1}")
            elif H.is_whole():
                labels.append("G")
            else:
                labels.append(_structure_tag(H) or f"H{H.order}")
        counts = Counter(labels)
        return [
            f"{lab}#{i}" if counts[lab] > 1 or lab == f"H{classes[i].order}" else lab
            for i, lab in enumerate(labels)
        ]

    return G.memo("class_labels", compute)


def render_combination(R: FormalCombination) -> str:
    if R.is_zero():
        return "0"
    labels = class_labels(R.group)
    return " + ".join(f"[{c}]·{labels[cid]}" for cid, c in R.coeffs.items())


def combination_json(R: FormalCombination) -> list[dict]:
    labels = class_labels(R.group)
    return [{"class_id": cid, "label": labels[cid], "coeff": c} for cid, c in R.coeffs.items()]


def classification_json(c: Classification) -> dict:
    out = {"kind": c.kind.value}
    if c.kind is Kind.P_QUASI_ELEMENTARY:
        out["p"] = c.p
    return out


def classes_json(G: FiniteGroup) -> list[dict]:
    labels = class_labels(G)
    return [
        {"class_id": c.class_id, "label": labels[c.class_id], "order": c.order, "size": c.class_size}
        for c in subgroup_classes(G)
    ]


def theorem_json(spec: str, G: FiniteGroup, report: TheoremReport, rank: int) -> dict:
    out = {
        "spec": spec,
        "order": G.order,
        "classification": classification_json(report.classification),
        "predicted_d": report.predicted_d,
        "computed_d": report.computed_d,
        "rank": rank,
        "witness": combination_json(report.witness) if report.witness is not None else None,
        "trace": list(report.trace),
        "pass": report.passed,
    }
    if report.problem:
        out["problem"] = report.problem
    return out


def format_ms(ms) -> str:
    return "-" if ms is None else f"{ms:.1f} ms"


def human(data: dict) -> str:
    """Key-value text form of a report dict produced by the CLI."""
    lines = [f"spec:            {data['spec']}"]
    if "error" in data:
        lines.append(f"error:           {data['error']['type']}: {data['error']['message']}")
        return "\n".join(lines)
    lines.append(f"order:           {data['order']}")
    if "classification" in data:
        c = data["classification"]
        kind = {"Cyclic": "cyclic", "NotQuasiElementary": "not quasi-elementary",
                "PQuasiElementary": f"{c.get('p')}-quasi-elementary"}[c["kind"]]
        lines.append(f"classification:  {kind}")
    if "predicted_d" in data:
        lines.append(f"predicted d:     {data['predicted_d']}")
    if "computed_d" in data:
        lines.append(f"computed d:      {data['computed_d']}")
    if "rank" in data:
        lines.append(f"lattice rank:    {data['rank']}")
    if "classes" in data:
        lines.append("subgroup classes:")
        for c in data["classes"]:
            lines.append(f"  {c['class_id']:>3}  {c['label']:<10} order {c['order']:<5} conjugates {c['size']}")
    if "basis" in data:
        lines.append("basis:")
        for b in data["basis"]:
            lines.append("  " + _terms(b))
    if "witness" in data:
        w = data["witness"]
        lines.append(f"witness:         {'none' if w is None else _terms(w)}")
    if data.get("trace"):
        lines.append(f"reduction:       {' -> '.join(data['trace'])}")
    if "pass" in data:
        lines.append(f"result:          {'PASS' if data['pass'] else 'FAIL'}")
    if data.get("problem"):
        lines.append(f"problem:         {data['problem']}")
    lines.append(f"time:            {format_ms(data.get('ms'))}")
    return "\n".join(lines)


def _terms(terms: list[dict]) -> str:
    if not terms:
        return "0"
    return " + ".join(f"[{t['coeff']}]·{t['label']}" for t in terms)
