"""Command-line driver: ``schubert-ehrhart {ehrhart,scan,classify}``.

Exit codes: 0 success, 1 usage or parse error, 2 budget exceeded,
3 counterexample, instability or oracle disagreement.
"""
from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import sys
from typing import Sequence

from . import ehrhart as eh
from . import lab
from .oracles import Budget, BudgetExceeded, kohnert_monomial_count, lattice_points_direct
from .schubert import (
    bases,
    circuit_hyperplanes,
    ground_size,
    indicator,
    is_sparse_paving,
    parse_rsequence,
    parse_set,
    rank_of,
    rsequence_to_set,
    set_to_rsequence,
)

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_FOUND = 0, 1, 2, 3
FAMILIES = ("uniform", "minimal", "sparse_paving", "catalan")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_matroid_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("matroid")
    g.add_argument("--set", dest="set_literal", help='Schubert set, e.g. "{2,6,7,10}"')
    g.add_argument("--r", dest="r_literal", help='r-sequence, e.g. "1,1,3,2,2,1"')
    g.add_argument("--family", choices=FAMILIES)
    g.add_argument("--k", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--a", type=int)
    g.add_argument("--b", type=int)


def _add_budget(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("budgets")
    g.add_argument("--config", help="JSON file with budget overrides")
    g.add_argument("--max-boxes", type=int)
    g.add_argument("--oracle-max-n", type=int)
    g.add_argument("--oracle-max-t", type=int)
    g.add_argument("--classify-max-n", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="schubert-ehrhart", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ehrhart", help="Ehrhart polynomial and dilation counts")
    _add_matroid_args(p)
    _add_budget(p)
    p.add_argument("--t", type=int, help="single dilation factor")
    p.add_argument("--tmax", type=int, help="report counts for t = 0..tmax (default 3)")
    p.add_argument("--verify", action="store_true", help="cross-check counts with the oracles")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("scan", help="conjecture scans and the identity suite")
    p.add_argument("which", choices=("f-positivity", "catalan", "bounds", "identities"))
    p.add_argument("--max", type=int, help="bound on a, b (and |c|); parameter budget for identities")
    p.add_argument("--max-n", type=int, help="bound on n for catalan and bounds")
    p.add_argument("--tmax", type=int, help="t budget for identities")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include wall-clock time (breaks byte stability)")

    p = sub.add_parser("classify", help="brute-force matroid classification")
    _add_matroid_args(p)
    _add_budget(p)
    return parser


# -- helpers ---------------------------------------------------------------


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--family {args.family} needs {' '.join(missing)}")
    return [getattr(args, n) for n in names]


def resolve_matroid(args) -> tuple[int, ...]:
    """r-sequence for exactly one of --set, --r, --family."""
    given = [x is not None for x in (args.set_literal, args.r_literal, args.family)]
    if sum(given) != 1:
        raise UsageError("give exactly one of --set, --r, --family")
    try:
        if args.set_literal is not None:
            return set_to_rsequence(parse_set(args.set_literal))
        if args.r_literal is not None:
            return parse_rsequence(args.r_literal)
        if args.family == "catalan":
            return eh.catalan_rsequence(*_need(args, "n", "a", "b"))
        k, n = _need(args, "k", "n")
        builder = {
            "uniform": eh.uniform_rsequence,
            "minimal": eh.minimal_rsequence,
            "sparse_paving": eh.sparse_paving_rsequence,
        }[args.family]
        return builder(k, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def load_budget(args) -> tuple[Budget, int]:
    fields = {}
    classify_max_n = 12
    if args.config:
        try:
            with open(args.config) as fh:
                cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from exc
        known = {f.name for f in dataclasses.fields(Budget)}
        for key, value in cfg.items():
            if key == "classify_max_n":
                classify_max_n = int(value)
            elif key in known:
                fields[key] = int(value)
            else:
                raise UsageError(f"unknown config key {key!r}")
    for flag, key in (("max_boxes", "max_boxes"), ("oracle_max_n", "max_n"), ("oracle_max_t", "max_t")):
        if getattr(args, flag) is not None:
            fields[key] = getattr(args, flag)
    if args.classify_max_n is not None:
        classify_max_n = args.classify_max_n
    return Budget(**fields), classify_max_n


def _t_range(args) -> list[int]:
    if args.t is not None and args.tmax is not None:
        raise UsageError("--t and --tmax are exclusive")
    if args.t is not None:
        if args.t < 0:
            raise UsageError("--t must be >= 0")
        return [args.t]
    tmax = 3 if args.tmax is None else args.tmax
    if tmax < 0:
        raise UsageError("--tmax must be >= 0")
    return list(range(tmax + 1))


# -- commands --------------------------------------------------------------


def cmd_ehrhart(args, out) -> int:
    r = resolve_matroid(args)
    budget, _ = load_budget(args)
    ts = _t_range(args)
    poly = eh.ehrhart_polynomial(r)
    values = {t: eh.count_dilation(r, t) for t in ts}
    payload = {
        "r": list(r),
        "n": ground_size(r),
        "rank": rank_of(r),
        "polynomial": lab.polynomial_json(poly),
        "values": {str(t): str(v) for t, v in values.items()},
    }
    status = EXIT_OK
    if args.verify:
        S = rsequence_to_set(r)
        checks = {}
        for t in ts:
            lattice = lattice_points_direct(S, t, budget)
            boxes = t * len(S)
            kohnert = None
            if boxes <= budget.max_boxes:
                alpha = [t * x for x in indicator(S)]
                kohnert = kohnert_monomial_count(alpha, budget)
            agree = lattice == values[t] and kohnert in (None, values[t])
            checks[str(t)] = {
                "engine": str(values[t]),
                "lattice": str(lattice),
                "kohnert": None if kohnert is None else str(kohnert),
                "agree": agree,
            }
            if not agree:
                status = EXIT_FOUND
        payload["verify"] = checks
    if args.format == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "count"])
        for t, v in values.items():
            w.writerow([t, v])
        w.writerow(["degree", "coefficient"])
        for m, c in enumerate(poly.coefficients):
            w.writerow([m, f"{c.numerator}/{c.denominator}"])
        out.write(buf.getvalue())
    return status


def cmd_scan(args, out) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    try:
        if args.which == "f-positivity":
            m = 4 if args.max is None else args.max
            report = lab.scan_f_positivity(m, m, m, jobs=args.jobs)
        elif args.which == "catalan":
            n = 4 if args.max_n is None else args.max_n
            m = 2 if args.max is None else args.max
            report = lab.scan_catalan_conjectures(n, m, m, jobs=args.jobs)
        elif args.which == "bounds":
            report = lab.check_sparse_paving_bounds(10 if args.max_n is None else args.max_n, jobs=args.jobs)
        else:
            report = lab.run_identity_suite(args.max, args.tmax, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out.write(report.to_json(timing=args.timing) + "\n")
    return EXIT_OK if report.ok else EXIT_FOUND


def cmd_classify(args, out) -> int:
    r = resolve_matroid(args)
    _, max_n = load_budget(args)
    n = ground_size(r)
    if n > max_n:
        raise BudgetExceeded(f"n={n} exceeds classify budget {max_n}")
    S = rsequence_to_set(r)
    payload = {
        "set": list(S),
        "r": list(r),
        "sparse_paving": is_sparse_paving(S),
        "rank": len(S),
        "n_bases": len(bases(S)),
        "circuit_hyperplanes": [list(c) for c in circuit_hyperplanes(S)],
    }
    out.write(json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


COMMANDS = {"ehrhart": cmd_ehrhart, "scan": cmd_scan, "classify": cmd_classify}


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except BudgetExceeded as exc:
        err.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
