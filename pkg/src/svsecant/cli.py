"""Command-line front end.

Subcommands: ``dim``, ``scan``, ``grassmann``, ``verify``.  Exit codes:
0 success, 1 method disagreement or failed verification, 2 usage error,
3 size-cap breach.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from itertools import product

from .combinat import SizeCapError, VarietySpec
from .config import METHODS, RunConfig, default_seed
from .modlinalg import DEFAULT_PRIME
from .secant import MethodDisagreement, grassmann_secant_dimension, secant_dimension
from .suites import SUITES, run_suite, summarize

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

SCAN_COLUMNS = ["factors", "degree", "s", "N", "dim_expected", "dim_actual", "defect",
                "certified", "prime", "seed", "trials"]


def _int_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    p.add_argument("--seed", type=int, default=None,
                   help="64-bit seed (default: $SECANT_SEED or fresh entropy; always echoed)")
    p.add_argument("--trials", type=int, default=2)
    p.add_argument("--method", choices=METHODS, default="both")
    p.add_argument("--size-cap", type=int, default=200_000)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--jobs", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="svsecant",
        description="Secant dimensions of Segre-Veronese varieties via fat-point ranks over F_p.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="dimension and defect of one secant variety")
    p.add_argument("--factors", type=_int_list, required=True)
    p.add_argument("--degree", type=_int_list, required=True)
    p.add_argument("--s", type=int, required=True)
    _add_config_flags(p)

    p = sub.add_parser("scan", help="table over all degrees <= degree-max and s <= s-max")
    p.add_argument("--factors", type=_int_list, required=True)
    p.add_argument("--degree-max", type=int, required=True)
    p.add_argument("--s-max", type=int, required=True)
    _add_config_flags(p)

    p = sub.add_parser("grassmann", help="Grassmann secant via the product with P^k")
    p.add_argument("--factors", type=_int_list, required=True)
    p.add_argument("--degree", type=_int_list, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    _add_config_flags(p)

    p = sub.add_parser("verify", help="run a frozen verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    _add_config_flags(p)
    return parser


def _config(args) -> RunConfig:
    seed = args.seed if args.seed is not None else default_seed()
    return RunConfig(prime=args.prime, seed=seed, trials=args.trials, method=args.method,
                     size_cap=args.size_cap)


def _report_text(d: dict) -> str:
    spec = d["spec"]
    lines = [
        f"V[n={tuple(spec['factors'])}, a={tuple(spec['degree'])}]  N={spec['N']}  s={d['s']}",
        f"  H(Z,a)={d['hilbert']}  dim={d['dim_actual']}  expected={d['dim_expected']}"
        f"  defect={d['defect']}  method={d['method']}",
    ]
    if d["certificate"]:
        c = d["certificate"]
        lines.append(f"  split b={tuple(c['b'])} c={tuple(c['c'])} dim_Ib={c['dim_Ib']} "
                     f"dim_Ic={c['dim_Ic']} proves_defect={c['proves_defect']}")
    m = d["metadata"]
    lines.append(f"  prime={m['prime']} seed={m['seed']} trials={m['trials']} "
                 f"ranks={m['per_trial_ranks']}")
    return "\n".join(lines)


def _scan_row(report, spec: VarietySpec, s: int, cfg: RunConfig) -> dict:
    row = {
        "factors": list(spec.shape.factors),
        "degree": list(spec.degree.degrees),
        "s": s,
        "N": spec.N,
        "prime": cfg.prime,
        "seed": cfg.seed,
        "trials": cfg.trials,
    }
    if report is None:
        row.update(status="skipped", dim_expected=None, dim_actual=None, defect=None,
                   certified=None, defective=None)
    else:
        row.update(status="ok", dim_expected=report.dim_expected, dim_actual=report.dim_actual,
                   defect=report.defect, certified=report.certified, defective=report.defective)
    return row


def _csv_cell(v):
    if isinstance(v, list):
        return ",".join(map(str, v))
    return "skipped" if v is None else v


def cmd_scan(args, cfg: RunConfig, out) -> int:
    if args.degree_max < 1 or args.s_max < 1:
        print("scan: empty grid (degree-max and s-max must be >= 1)", file=sys.stderr)
        return EXIT_USAGE
    t = len(args.factors)
    cells = [(deg, s) for deg in product(range(1, args.degree_max + 1), repeat=t)
             for s in range(1, args.s_max + 1)]

    def one(cell):
        deg, s = cell
        spec = VarietySpec.of(args.factors, deg)
        try:
            report = secant_dimension(spec, s, cfg)
        except SizeCapError:
            report = None
        return _scan_row(report, spec, s, cfg)

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(one, cells))
    else:
        rows = [one(c) for c in cells]

    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(SCAN_COLUMNS)
        for r in rows:
            w.writerow([_csv_cell(r[c]) for c in SCAN_COLUMNS])
        out.write(buf.getvalue())
    elif args.format == "text":
        for r in rows:
            flag = "*" if r["defective"] else " "
            out.write(f"{flag} a={tuple(r['degree'])} s={r['s']:>3} N={r['N']:>4} "
                      f"expected={r['dim_expected']} dim={r['dim_actual']} defect={r['defect']}\n")
    else:
        out.write(dumps({"config": cfg.to_dict(), "factors": list(args.factors), "rows": rows}) + "\n")
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig, out) -> int:
    results = run_suite(args.suite, cfg, jobs=args.jobs)
    summary = summarize(results)
    if args.format == "text":
        for r in results:
            out.write(f"{'PASS' if r.passed else 'FAIL'}  {r.name}  {json.dumps(r.detail, sort_keys=True)}\n")
        out.write(f"{args.suite}: {summary['passed']}/{summary['cases']} passed "
                  f"(prime={cfg.prime} seed={cfg.seed})\n")
    else:
        out.write(dumps({"suite": args.suite, "config": cfg.to_dict(), "summary": summary,
                         "cases": [r.to_dict() for r in results]}) + "\n")
    return EXIT_OK if summary["all_passed"] else EXIT_DISAGREE


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config(args)
        if args.command == "dim":
            report = secant_dimension(VarietySpec.of(args.factors, args.degree), args.s, cfg)
            d = report.to_dict()
            out.write((_report_text(d) if args.format == "text" else dumps(d)) + "\n")
            return EXIT_OK
        if args.command == "grassmann":
            g = grassmann_secant_dimension(VarietySpec.of(args.factors, args.degree),
                                           args.k, args.s, cfg)
            out.write(dumps(g.to_dict()) + "\n")
            return EXIT_OK
        if args.command == "scan":
            return cmd_scan(args, cfg, out)
        return cmd_verify(args, cfg, out)
    except SizeCapError as exc:
        print(f"size cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except MethodDisagreement as exc:
        print(f"method disagreement: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
