"""Command line front end.

Subcommands mirror the library: avol, derivative, diskant, oracle, okounkov,
suite.  Scenes are JSON files (see scenes.py).  Output is JSON by default
(CSV for the oracle table); checking subcommands exit nonzero when a check
fails, so they can sit in shell pipelines.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .errors import AdelicVolumesError
from .exactnum import scalar_float
from .harness import check_differentiability, diskant_report, run_suite, suite_names
from .positivity import avol
from .scenes import load_scene
from .sections import analytic_okounkov, okounkov_sample, section_box, volume_estimate


def _scalar_json(x) -> dict:
    return {"exact": str(x), "float": scalar_float(x)}


def _emit(args, payload: dict, csv_rows) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        out = io.StringIO()
        writer = csv.writer(out)
        for row in csv_rows:
            writer.writerow(row)
        sys.stdout.write(out.getvalue())


def _cmd_avol(args) -> int:
    pair = load_scene(args.scene)
    value = avol(pair)
    payload = {"avol": _scalar_json(value)}
    _emit(args, payload, [["avol"], [scalar_float(value)]])
    return 0


def _cmd_derivative(args) -> int:
    pair = load_scene(args.scene)
    direction = load_scene(args.direction)
    hs = None
    if args.h:
        hs = [Fraction(part) for part in args.h.split(",")]
    report = check_differentiability(pair, direction, hs=hs)
    rows = [["h", "forward", "backward", "central"]]
    table = []
    for row in report.table:
        rows.append([float(row.h), scalar_float(row.forward),
                     scalar_float(row.backward), scalar_float(row.central)])
        table.append({
            "h": str(row.h),
            "forward": _scalar_json(row.forward),
            "backward": _scalar_json(row.backward),
            "central": _scalar_json(row.central),
        })
    payload = {
        "analytic": _scalar_json(report.analytic),
        "derivative": None if report.derivative is None else _scalar_json(report.derivative),
        "exact_right": None if report.exact_right is None else _scalar_json(report.exact_right),
        "exact_left": None if report.exact_left is None else _scalar_json(report.exact_left),
        "deviation": _scalar_json(report.deviation),
        "curvature_jump": report.curvature_jump,
        "table": table,
    }
    _emit(args, payload, rows)
    return 0


def _cmd_diskant(args) -> int:
    p1 = load_scene(args.scene1)
    p2 = load_scene(args.scene2)
    report = diskant_report(p1, p2)
    payload = {
        "s": [str(report.s0), str(report.s1), str(report.s2)],
        "s_float": [scalar_float(report.s0), scalar_float(report.s1),
                    scalar_float(report.s2)],
        "r": str(report.r.value),
        "R": str(report.R.value),
        "r_bracket": [str(report.r.lo), str(report.r.hi)],
        "R_bracket": [str(report.R.lo), str(report.R.hi)],
        "slacks": {c.name: float(c.slack) for c in report.cases},
        "pass": report.all_pass,
    }
    rows = [["quantity", "value"],
            ["s0", scalar_float(report.s0)], ["s1", scalar_float(report.s1)],
            ["s2", scalar_float(report.s2)],
            ["r", float(report.r)], ["R", float(report.R)],
            [], ["case", "slack", "passed"]]
    for c in report.cases:
        rows.append([c.name, float(c.slack), c.passed])
    _emit(args, payload, rows)
    return 0 if report.all_pass else 1


def _cmd_oracle(args) -> int:
    pair = load_scene(args.scene)
    ms = [int(part) for part in args.m.split(",")]
    analytic = avol(pair)
    fa = scalar_float(analytic)
    rows = [["m", "log_count", "estimate", "analytic_avol", "error"]]
    table = []
    for m in ms:
        box = section_box(pair, m)
        log_count = float(box.log_count())
        est = float(volume_estimate(pair, m))
        rows.append([m, log_count, est, fa, abs(est - fa)])
        table.append({"m": m, "log_count": log_count, "estimate": est,
                      "analytic_avol": fa, "error": abs(est - fa)})
    _emit(args, {"rows": table}, rows)
    return 0


def _cmd_okounkov(args) -> int:
    pair = load_scene(args.scene)
    data = analytic_okounkov(pair)
    sample = okounkov_sample(pair, args.m)
    gaps = []
    entries = []
    for w, t in sample.entries:
        analytic = scalar_float(data.transform.eval(w))
        empirical = None if t is None else float(t)
        if empirical is not None:
            gaps.append(abs(empirical - analytic))
        entries.append({"w": str(w), "empirical": empirical, "analytic": analytic})
    payload = {
        "domain": [str(data.domain.lo), str(data.domain.hi)],
        "body_volume": _scalar_json(data.body_volume),
        "avol": _scalar_json(data.avol),
        "m": args.m,
        "max_gap": max(gaps) if gaps else None,
        "samples": entries,
    }
    rows = [["w", "empirical", "analytic"]]
    for e in entries:
        rows.append([e["w"], e["empirical"], e["analytic"]])
    _emit(args, payload, rows)
    return 0


def _cmd_suite(args) -> int:
    result = run_suite(args.name, count=args.count, seed=args.seed)
    payload = result.to_payload()
    rows = [list(payload), [payload[k] for k in payload]]
    _emit(args, payload, rows)
    return 0 if result.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adelic-volumes",
        description="Exact arithmetic volumes of divisor pairs on the "
                    "projective line over Q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=["json", "csv"],
                       default="csv" if name == "oracle" else "json")
        return p

    p = add("avol", _cmd_avol, "arithmetic volume of a scene")
    p.add_argument("scene")

    p = add("derivative", _cmd_derivative,
            "finite-difference table and exact derivative along a direction")
    p.add_argument("scene")
    p.add_argument("--direction", required=True,
                   help="scene file for the direction divisor")
    p.add_argument("--h", default=None,
                   help="comma-separated step sizes (default 2^-4..2^-12)")

    p = add("diskant", _cmd_diskant,
            "isoperimetric inequality chain for two scenes")
    p.add_argument("scene1")
    p.add_argument("scene2")

    p = add("oracle", _cmd_oracle, "brute-force section counts vs the volume")
    p.add_argument("scene")
    p.add_argument("--m", default="1,2,4,8,16",
                   help="comma-separated grid scales")

    p = add("okounkov", _cmd_okounkov,
            "convex body data and empirical filtration values")
    p.add_argument("scene")
    p.add_argument("--m", type=int, default=64)

    p = add("suite", _cmd_suite, "run a named property suite")
    p.add_argument("name", choices=list(suite_names()))
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (AdelicVolumesError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
