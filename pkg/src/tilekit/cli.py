"""Command-line front end: analyze, complement, factor, bounds, batch.

Single instances and linear-form instances come in as JSON, batch
sweeps as a small grid spec; results go out as JSON reports or CSV
tables with big integers serialized as decimal strings.  Exit codes:
0 for a completed analysis (existing or not), 2 when any instance was
inconclusive under the state budget, 1 for bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from itertools import product
from typing import Iterator, Sequence

from .engine import (
    DEFAULT_BUDGET,
    DEFAULT_EPSILON,
    STATUS_INCONCLUSIVE,
    TilingReport,
    find_complement,
)
from .lemmas import (
    lemma1_suite,
    lemma2_suite,
    lemma3_suite,
    lemma4_suite,
    theorem8_bound_report,
)
from .multiset import IntegerMultiset, linear_form_to_multiset, parse_linear_form_input
from .polynomial import cyclotomic_part, poly_from_strings, poly_to_strings

BATCH_SCHEMA_VERSION = 1
BATCH_HEADER = [
    "schemaVersion",
    "diam",
    "t",
    "instanceId",
    "exists",
    "k",
    "newmanBound",
    "logK",
    "biroBoundLog",
    "status",
]
BUDGET_ENV_VAR = "TILEKIT_BUDGET"


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_output(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _json_bytes(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _resolve_budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV_VAR)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {env!r}") from None
    return DEFAULT_BUDGET


def _parse_instance(text: str) -> tuple[IntegerMultiset, int]:
    obj = json.loads(text)
    if not isinstance(obj, dict):
        raise ValueError("instance input must be a JSON object")
    try:
        t = int(obj["t"])
    except (KeyError, TypeError, ValueError):
        raise ValueError('instance needs an integer field "t"') from None
    if t < 1:
        raise ValueError("t must be a positive integer")
    if "u" in obj:
        sets, form = parse_linear_form_input(obj)
        translated, _scale = linear_form_to_multiset(sets, form)
        return translated, t
    return IntegerMultiset.from_json_dict(obj), t


def cmd_analyze(args) -> int:
    a, t = _parse_instance(_read_input(args.input))
    report = find_complement(a, t, budget=_resolve_budget(args), epsilon=args.epsilon)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(BATCH_HEADER)
        writer.writerow(_batch_row(report, 0))
        _write_output(args.output, buf.getvalue())
    else:
        _write_output(args.output, _json_bytes(report.to_json_dict()))
    return 2 if report.status == STATUS_INCONCLUSIVE else 0


def cmd_complement(args) -> int:
    a, t = _parse_instance(_read_input(args.input))
    report = find_complement(a, t, budget=_resolve_budget(args), epsilon=args.epsilon)
    witness = report.witness
    out = {
        "exists": report.exists,
        "period": report.minimal_period_combinatorial,
        "periodBlock": list(witness.period) if witness else None,
        "preperiod": list(witness.preperiod) if witness else None,
        "offset": witness.offset if witness else None,
        "twoSided": witness.two_sided if witness else None,
        "status": report.status,
    }
    _write_output(args.output, _json_bytes(out))
    return 2 if report.status == STATUS_INCONCLUSIVE else 0


def cmd_factor(args) -> int:
    obj = json.loads(_read_input(args.input))
    if not isinstance(obj, list):
        raise ValueError("polynomial input must be a JSON array of coefficient strings")
    f = poly_from_strings(obj)
    if f.is_zero:
        raise ValueError("zero polynomial has no factorization")
    fact = cyclotomic_part(f)
    out = {
        "content": str(fact.content),
        "multiplicities": {str(d): v for d, v in sorted(fact.multiplicities.items())},
        "cofactor": poly_to_strings(fact.cofactor),
    }
    _write_output(args.output, _json_bytes(out))
    return 0


def _enumerate_instances(diam: int, weight_cap: int) -> Iterator[IntegerMultiset]:
    """All multisets with support in [0, diam] containing both endpoints.

    Endpoint weights range over 1..cap, interior weights over 0..cap
    (0 meaning absent); deterministic lexicographic order.
    """
    if diam == 0:
        for w in range(1, weight_cap + 1):
            yield IntegerMultiset({0: w})
        return
    for w0 in range(1, weight_cap + 1):
        for wd in range(1, weight_cap + 1):
            for interior in product(range(weight_cap + 1), repeat=diam - 1):
                weights = {0: w0, diam: wd}
                for i, w in enumerate(interior, start=1):
                    if w:
                        weights[i] = w
                yield IntegerMultiset(weights)


def _batch_row(report: TilingReport, instance_id: int) -> list:
    k = report.minimal_period_combinatorial
    return [
        BATCH_SCHEMA_VERSION,
        report.diam,
        report.t,
        instance_id,
        "" if report.exists is None else str(report.exists).lower(),
        "" if k is None else k,
        str(report.newman_bound),
        "" if k is None else repr(math.log(k)),
        repr(report.biro_bound_log),
        report.status,
    ]


def cmd_batch(args) -> int:
    grid = json.loads(_read_input(args.input))
    if not isinstance(grid, dict):
        raise ValueError("grid input must be a JSON object")
    diams = [int(x) for x in grid.get("diams", [])]
    ts = [int(x) for x in grid.get("ts", [])]
    weight_cap = int(grid.get("weightCap", 1))
    max_instances = grid.get("maxInstances")
    if weight_cap < 1:
        raise ValueError("weightCap must be a positive integer")
    if any(d < 0 for d in diams) or any(t < 1 for t in ts):
        raise ValueError("diams must be >= 0 and ts >= 1")
    budget = _resolve_budget(args)

    rows = []
    reports = []
    instance_id = 0
    inconclusive = False
    for diam in diams:
        for t in ts:
            for a in _enumerate_instances(diam, weight_cap):
                if max_instances is not None and instance_id >= int(max_instances):
                    break
                report = find_complement(a, t, budget=budget, epsilon=args.epsilon)
                rows.append(_batch_row(report, instance_id))
                reports.append(report)
                inconclusive = inconclusive or report.status == STATUS_INCONCLUSIVE
                instance_id += 1

    if args.format == "json":
        out = [dict(zip(BATCH_HEADER, row)) for row in rows]
        _write_output(args.output, _json_bytes(out))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(BATCH_HEADER)
        writer.writerows(rows)
        _write_output(args.output, buf.getvalue())
    return 2 if inconclusive else 0


def _bounds_config(text: str | None) -> dict:
    if not text or not text.strip():
        return {}
    obj = json.loads(text)
    if not isinstance(obj, dict):
        raise ValueError("bounds config must be a JSON object")
    return obj


def cmd_bounds(args) -> int:
    cfg = _bounds_config(_read_input(args.input) if args.input else None)
    seed = args.seed
    epsilon = args.epsilon
    l1 = cfg.get("lemma1", {})
    l2 = cfg.get("lemma2", {})
    l3 = cfg.get("lemma3", {})
    l4 = cfg.get("lemma4", {})
    t8 = cfg.get("theorem8", {})

    reports = [
        lemma1_suite(
            count=int(l1.get("count", 200)),
            seed=seed,
            max_h_degree=int(l1.get("maxHDegree", 50)),
            max_coeff=int(l1.get("maxCoeff", 10**6)),
            max_d=int(l1.get("maxD", 20)),
        ),
        lemma2_suite(
            count=int(l2.get("count", 100)),
            seed=seed,
            epsilon=epsilon,
            max_m=int(l2.get("maxM", 30)),
        ),
        lemma3_suite(
            k_values=[int(k) for k in l3.get("ks", (10, 100, 1000, 10000))],
            epsilon=epsilon,
        ),
        lemma4_suite(count=int(l4.get("count", 100)), seed=seed),
    ]

    budget = _resolve_budget(args)
    tiling_reports = []
    for diam in t8.get("diams", (1, 2, 3, 4)):
        for t in t8.get("ts", (1, 2)):
            for a in _enumerate_instances(int(diam), int(t8.get("weightCap", 1))):
                tiling_reports.append(
                    find_complement(a, int(t), budget=budget, epsilon=epsilon)
                )
    t8_report = theorem8_bound_report(tiling_reports, epsilon)

    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["lemmaId", "instanceId", "n", "d", "observed", "bound", "result"])
        for rep in reports:
            for entry in rep.entries:
                writer.writerow(entry.to_row())
        _write_output(args.output, buf.getvalue())
    else:
        out = {
            "seed": seed,
            "epsilon": epsilon,
            "lemmas": [rep.to_json_dict() for rep in reports],
            "theorem8": t8_report,
        }
        _write_output(args.output, _json_bytes(out))
    violations = sum(rep.violations for rep in reports)
    return 1 if violations else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tilekit",
        description="Exact decision, construction and period analysis of "
        "t-complement tilings of the integers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, needs_input: bool = True):
        p.add_argument(
            "--input",
            default=None if not needs_input else "-",
            help="input file path ('-' for stdin)",
        )
        p.add_argument("--output", default=None, help="output file path (default stdout)")
        p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
        p.add_argument(
            "--budget",
            type=int,
            default=None,
            help=f"max window states to visit (default ${BUDGET_ENV_VAR} or {DEFAULT_BUDGET})",
        )
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("json", "csv"), default=None)

    p = sub.add_parser("analyze", help="full tiling report for one instance")
    add_common(p)
    p.set_defaults(func=cmd_analyze, default_format="json")

    p = sub.add_parser("complement", help="witness construction only")
    add_common(p)
    p.set_defaults(func=cmd_complement, default_format="json")

    p = sub.add_parser("factor", help="cyclotomic factorization of a polynomial")
    add_common(p)
    p.set_defaults(func=cmd_factor, default_format="json")

    p = sub.add_parser("bounds", help="lemma verification and bound reports")
    add_common(p, needs_input=False)
    p.set_defaults(func=cmd_bounds, default_format="json")

    p = sub.add_parser("batch", help="grid sweep to CSV/JSON")
    add_common(p)
    p.set_defaults(func=cmd_batch, default_format="csv")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"tilekit: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
