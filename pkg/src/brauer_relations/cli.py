"""Command line front end.

    brauer verify "sd(7,3,2)"
    brauer lattice Q8 --json
    brauer sweep catalog.txt --jobs 4

Exit status: 0 on success / theorem agreement, 1 on a theorem mismatch,
2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from importlib import resources

from .classify import classify, predicted_ideal
from .errors import BrauerError
from .groups import MAX_ORDER
from .groupspec import build_group, parse_group_spec, render
from .relations import coefficient_ideal, relation_lattice
from .report import classes_json, classification_json, combination_json, human, theorem_json
from .theorem import verify_theorem

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2
COMMANDS = ("classify", "ideal", "lattice", "witness", "verify")

log = logging.getLogger("brauer_relations")


def _command_data(command: str, spec_text: str, max_order: int) -> dict:
    spec = parse_group_spec(spec_text)
    canonical = render(spec)
    G = build_group(spec, max_order=max_order)
    data: dict = {"spec": canonical, "order": G.order}
    if command == "classify":
        data["classification"] = classification_json(classify(G))
    elif command == "ideal":
        c = classify(G)
        data["classification"] = classification_json(c)
        data["predicted_d"] = predicted_ideal(c)
        data["computed_d"] = coefficient_ideal(G)
    elif command == "lattice":
        lat = relation_lattice(G)
        data["rank"] = lat.rank
        data["classes"] = classes_json(G)
        data["basis"] = [combination_json(R) for R in lat.basis]
    elif command in ("witness", "verify"):
        report = verify_theorem(G, canonical)
        full = theorem_json(canonical, G, report, relation_lattice(G).rank)
        if command == "witness":
            keys = ("spec", "order", "classification", "computed_d", "witness", "trace")
            full = {k: full[k] for k in keys}
        data = full
    else:
        raise ValueError(f"unknown command {command!r}")
    return data


def run(command: str, spec_text: str, max_order: int = MAX_ORDER, timing: bool = True) -> tuple[dict, int]:
    """Execute one command on one group spec; returns (report dict, exit code)."""
    start = time.perf_counter()
    try:
        data = _command_data(command, spec_text, max_order)
        code = EXIT_MISMATCH if data.get("pass") is False else EXIT_OK
    except BrauerError as exc:
        data = {"spec": spec_text.strip(), "error": {"type": type(exc).__name__, "message": str(exc)}}
        code = EXIT_INPUT
    data["ms"] = round((time.perf_counter() - start) * 1000, 1) if timing else None
    return data, code


def read_catalog(text: str) -> list[tuple[int, str]]:
    """(line number, spec) pairs; ``#`` starts a comment, blank lines skipped."""
    entries = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            entries.append((lineno, line))
    return entries


def default_catalog() -> str:
    return resources.files("brauer_relations").joinpath("catalog.txt").read_text(encoding="utf-8")


def _sweep_one(args):
    lineno, spec_text, max_order, timing = args
    data, code = run("verify", spec_text, max_order, timing)
    data["line"] = lineno
    return data, code


def sweep(catalog_text: str, jobs: int = 1, max_order: int = MAX_ORDER, timing: bool = True) -> tuple[dict, int]:
    """Verify every catalog entry; results keep file order whatever ``jobs`` is."""
    work = [(lineno, s, max_order, timing) for lineno, s in read_catalog(catalog_text)]
    start = time.perf_counter()
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_sweep_one, work, chunksize=1))
    else:
        outcomes = [_sweep_one(w) for w in work]
    results = [d for d, _ in outcomes]
    codes = [c for _, c in outcomes]
    summary = {
        "total": len(results),
        "passed": codes.count(EXIT_OK),
        "failed": codes.count(EXIT_MISMATCH),
        "errors": codes.count(EXIT_INPUT),
    }
    if EXIT_MISMATCH in codes:
        code = EXIT_MISMATCH
    elif EXIT_INPUT in codes:
        code = EXIT_INPUT
    else:
        code = EXIT_OK
    ms = round((time.perf_counter() - start) * 1000, 1) if timing else None
    return {"results": results, "summary": summary, "ms": ms}, code


def _sweep_line(d: dict) -> str:
    where = f"line {d['line']:>3}"
    if "error" in d:
        return f"ERROR {where}  {d['spec']}: {d['error']['message']}"
    c = d["classification"]
    kind = c["kind"] + (f"(p={c['p']})" if "p" in c else "")
    status = "PASS " if d["pass"] else "FAIL "
    return (f"{status} {where}  {d['spec']:<16} order={d['order']:<5} {kind:<22} "
            f"d={d['computed_d']} (predicted {d['predicted_d']})  rank={d['rank']}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="brauer", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--max-order", type=int, default=MAX_ORDER,
                       help=f"refuse groups larger than this (default and ceiling {MAX_ORDER})")
        p.add_argument("--no-timing", action="store_true",
                       help="report ms as null, for reproducible output")

    for name in COMMANDS:
        p = sub.add_parser(name, help=f"{name} a group given as a spec such as 'sd(7,3,2)'")
        p.add_argument("spec")
        common(p)
    p = sub.add_parser("sweep", help="verify every group listed in a catalog file")
    p.add_argument("catalog", nargs="?", help="catalog file (default: bundled catalog)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    common(p)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    max_order = min(args.max_order, MAX_ORDER)
    timing = not args.no_timing

    if args.command == "sweep":
        try:
            text = default_catalog() if args.catalog is None else open(args.catalog, encoding="utf-8").read()
        except OSError as exc:
            data = {"spec": args.catalog, "error": {"type": type(exc).__name__, "message": str(exc)}, "ms": None}
            if args.json:
                print(json.dumps(data, indent=2))
            else:
                print(f"error: cannot read catalog: {exc}", file=sys.stderr)
            return EXIT_INPUT
        data, code = sweep(text, jobs=max(1, args.jobs), max_order=max_order, timing=timing)
        if args.json:
            print(json.dumps(data, indent=2, ensure_ascii=False))
        else:
            for d in data["results"]:
                print(_sweep_line(d))
            s = data["summary"]
            print(f"{s['total']} groups: {s['passed']} passed, {s['failed']} failed, "
                  f"{s['errors']} input errors")
        return code

    data, code = run(args.command, args.spec, max_order, timing)
    if args.json:
        print(json.dumps(data, indent=2, ensure_ascii=False))
    elif "error" in data:
        print(f"error: {data['error']['message']}", file=sys.stderr)
    else:
        print(human(data))
    return code


if __name__ == "__main__":
    sys.exit(main())
