"""Command-line front end.

Subcommands reproduce the bundled reference tables and run the
cross-validation suites.  Output schemas:

* csv: header ``r,s,n,m,count``; column totals appear as ``m = -1`` rows;
  a truncated run is marked with an ``m = -2`` row.
* json: the same rows with every count serialized as a decimal string.
* pretty: aligned human-readable columns.

Exit codes: 0 success, 1 verification mismatch, 2 resource exhaustion,
3 bad arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field
from importlib import resources

from . import classify, enumeration, hamming, strategies
from .hamming import CapacityError, SizeDistribution

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_RESOURCE = 2
EXIT_USAGE = 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    fmt: str = "csv"
    workers: int = 1
    memo_budget: int = 2_000_000
    max_size: int = None
    out: str = None

    def __post_init__(self):
        if self.workers < 1:
            raise UsageError("worker count must be >= 1")
        if self.memo_budget < 0:
            raise UsageError("memo budget must be non-negative")


def _emit(rows, cfg: RunConfig, header=("r", "s", "n", "m", "count")):
    """Render rows in the configured format and write them out."""
    buf = io.StringIO()
    if cfg.fmt == "csv":
        w = csv.writer(buf)
        w.writerow(header)
        for row in rows:
            w.writerow(row)
    elif cfg.fmt == "json":
        payload = [dict(zip(header, (str(v) for v in row))) for row in rows]
        json.dump(payload, buf, indent=2)
        buf.write("\n")
    else:
        widths = [max(len(h), max((len(str(r[i])) for r in rows), default=0))
                  for i, h in enumerate(header)]
        buf.write("  ".join(h.rjust(w) for h, w in zip(header, widths)))
        buf.write("\n")
        for row in rows:
            buf.write("  ".join(str(v).rjust(w)
                                for v, w in zip(row, widths)))
            buf.write("\n")
    text = buf.getvalue()
    if cfg.out:
        with open(cfg.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _distribution_rows(r, s, n, dist: SizeDistribution, with_total=True):
    rows = [(r, s, n, m, dist[m]) for m in range(len(dist.counts))
            if dist[m]]
    if with_total:
        rows.append((r, s, n, -1, dist.total))
    return rows


def cmd_table1(bound: int, cfg: RunConfig) -> int:
    """Size distributions of all r x s rectangles on [n], r <= s <= n <=
    bound."""
    if bound < 1:
        raise UsageError("bound must be >= 1")
    rows = []
    try:
        for n in range(1, bound + 1):
            for s in range(1, n + 1):
                for r in range(1, s + 1):
                    d = enumeration.count_plr_by_size(
                        r, s, n, max_size=cfg.max_size)
                    rows.extend(_distribution_rows(
                        r, s, n, d, with_total=cfg.max_size is None))
    except (CapacityError, MemoryError) as exc:
        rows.append((0, 0, 0, -2, 0))
        _emit(rows, cfg)
        print(f"resource exhaustion: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    # group by (r, s, n) with each total row after its distribution
    rows.sort(key=lambda t: (t[0], t[1], t[2], t[3] if t[3] >= 0 else 10**9))
    _emit(rows, cfg)
    return EXIT_OK


def _sor_feasible(strategy, r, n, max_size):
    """Explanatory message when the strategy cannot run at this scale,
    else None."""
    if r <= 3 and n <= 9:
        return None
    if r == 4:
        if n <= 4:
            return None
        if strategy == "stratified" and max_size is not None and max_size <= 6:
            return None
        return ("r = 4 with n > 4 is only feasible with --max-size <= 6 "
                "and the stratified strategy; totals at this scale exceed "
                "10^9 objects")
    return ("feasible bounds: r <= 3 with n <= 9, r = 4 with n <= 4, or "
            "r = 4 with the stratified strategy and --max-size <= 6")


def _run_sor_strategy(strategy, r, n, cfg: RunConfig) -> SizeDistribution:
    if strategy == "direct":
        return enumeration.count_sor_by_size(r, n, max_size=cfg.max_size)
    if strategy == "stratified":
        return strategies.sor_distribution_stratified(
            r, n, max_size=cfg.max_size)
    if strategy == "sum-blocks":
        if r < 2:
            raise UsageError("sum-blocks needs r >= 2 to split into corners")
        a, b = strategies.default_split(r)
        d = strategies.sor_distribution_direct_sum(a, b, n,
                                                   workers=cfg.workers)
        return d.truncate(cfg.max_size)
    raise UsageError(f"unknown strategy {strategy!r}")


def cmd_table_sor(r: int, n: int, strategy: str, cross_check: bool,
                  cfg: RunConfig) -> int:
    """Size distribution of the self-orthogonal r x r rectangles on [n]."""
    if r < 1 or n < 1:
        raise UsageError("r and n must be positive")
    msg = _sor_feasible(strategy, r, n, cfg.max_size)
    if msg:
        raise UsageError(f"strategy {strategy!r} infeasible for "
                         f"(r={r}, n={n}): {msg}")
    try:
        dist = _run_sor_strategy(strategy, r, n, cfg)
        if cross_check:
            other = "stratified" if strategy != "stratified" else "direct"
            if _sor_feasible(other, r, n, cfg.max_size):
                other = "direct"
            check = _run_sor_strategy(other, r, n, cfg)
            if dist != check:
                print(f"cross-check mismatch: {strategy} gives "
                      f"{dist.counts}, {other} gives {check.counts}",
                      file=sys.stderr)
                return EXIT_MISMATCH
    except (CapacityError, MemoryError) as exc:
        print(f"resource exhaustion: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    _emit(_distribution_rows(r, r, n, dist,
                             with_total=cfg.max_size is None), cfg)
    return EXIT_OK


def cmd_classify(r: int, cfg: RunConfig) -> int:
    """Main classes of the exactly-s-symbol strata, s = 1..r^2."""
    if r < 1:
        raise UsageError("r must be positive")
    if r > 3:
        raise UsageError(
            "classification is supported for r <= 3 only; the r = 4 "
            "stratification has strata beyond 10^13 objects")
    cache = {}
    if cfg.fmt == "json":
        levels = []
        for s in range(1, r * r + 1):
            cat = classify.main_classes(r, s, cache)
            levels.append({
                "s": s,
                "num_classes": cat.num_classes,
                "sigma": str(cat.sigma),
                "classes": json.loads(cat.to_json()),
            })
        text = json.dumps({"r": r, "levels": levels}, indent=2) + "\n"
        if cfg.out:
            with open(cfg.out, "w") as f:
                f.write(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    rows = []
    for s in range(1, r * r + 1):
        cat = classify.main_classes(r, s, cache)
        rows.append((r, s, cat.num_classes, cat.sigma))
    _emit(rows, cfg, header=("r", "s", "classes", "sigma"))
    return EXIT_OK


def _golden_totals(resource_name):
    """Totals from a bundled reference CSV, keyed by (r, s, n)."""
    totals = {}
    path = resources.files("soplr").joinpath("data", resource_name)
    with path.open() as f:
        for row in csv.DictReader(f):
            if int(row["m"]) == -1:
                key = (int(row["r"]), int(row["s"]), int(row["n"]))
                totals[key] = int(row["count"])
    return totals


def cmd_verify_formulas(cfg: RunConfig) -> int:
    """Evaluate every closed-form identity against oracle counts; one
    pass/fail line each."""
    report = []
    failed = False

    def check(name, ok, detail=""):
        nonlocal failed
        report.append(f"{'PASS' if ok else 'FAIL'}  {name}"
                      + (f"  ({detail})" if detail else ""))
        failed = failed or not ok

    # |SOR_{1,n}| = n + 1
    ok = all(enumeration.sor_total_formula(1, n)
             == enumeration.count_sor_by_size(1, n).total
             for n in range(1, 8))
    check("|SOR_{1,n}| = n+1, n <= 7", ok)

    # degree-4 and degree-9 total polynomials vs the reference totals
    sor_tot = _golden_totals("table_sor_sizes.csv")
    for r in (2, 3):
        ok = all(enumeration.sor_total_formula(r, n) == sor_tot[(r, r, n)]
                 for n in range(1, 10))
        check(f"|SOR_{{{r},n}}| polynomial vs reference totals, n <= 9", ok)
        ok = all(enumeration.sor_total_formula(r, n)
                 == enumeration.count_sor_by_size(r, n).total
                 for n in range(1, 4 if r == 3 else 6))
        check(f"|SOR_{{{r},n}}| polynomial vs direct count", ok)

    # closed forms for sizes m <= 2 of the rectangle counts
    ok = True
    for r in range(1, 5):
        for s in range(r, 5):
            for n in range(s, 5):
                d = enumeration.count_plr_by_size(r, s, n, max_size=2)
                for m in range(3):
                    if hamming.closed_form_count(r, s, n, m) != d[m]:
                        ok = False
    check("small-size closed forms (m <= 2) vs direct count, "
          "r,s,n <= 4", ok)

    # sigma boundary cases
    for r in (2, 3):
        sq = r * r
        ok = (enumeration.sigma_closed_form(r, 0) == 1
              and enumeration.sigma_closed_form(r, sq)
              == math.factorial(sq)
              and enumeration.sigma_closed_form(r, sq + 1) == 0)
        check(f"sigma boundary cases r = {r}", ok)
    for r in (2, 3):
        got, _ = enumeration.count_sor_exact_symbols(r, r * r - 1)
        want = enumeration.sigma_closed_form(r, r * r - 1)
        check(f"sigma_{{{r},{r * r - 1}}} case-count expression", got == want,
              f"value {got}")
        shown = enumeration.sigma_closed_form_displayed(r)
        check(f"sigma_{{{r},{r * r - 1}}} published display differs "
              f"(documented discrepancy)", shown != got,
              f"display {shown} vs count {got}")

    text = "\n".join(report) + "\n"
    if cfg.out:
        with open(cfg.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_MISMATCH if failed else EXIT_OK


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json", "pretty"),
                        default="csv")
    common.add_argument("--workers", type=int,
                        default=int(os.environ.get("SOPLR_WORKERS", "1")))
    common.add_argument("--memo-budget", type=int, default=2_000_000)
    common.add_argument("--max-size", type=int, default=None)
    common.add_argument("--out", default=None)

    p = argparse.ArgumentParser(
        prog="soplr",
        description="Enumerate and classify partial Latin rectangles and "
                    "self-orthogonal partial Latin squares.")
    sub = p.add_subparsers(dest="command", required=True)

    t1 = sub.add_parser("table1", parents=[common],
                        help="size distributions of all r x s rectangles "
                             "on [n] with r <= s <= n <= BOUND")
    t1.add_argument("bound", type=int)

    ts = sub.add_parser("table-sor", parents=[common],
                        help="size distribution of the self-orthogonal "
                             "r x r rectangles on [n]")
    ts.add_argument("r", type=int)
    ts.add_argument("n", type=int)
    ts.add_argument("--strategy",
                    choices=("direct", "stratified", "sum-blocks"),
                    default="direct")
    ts.add_argument("--cross-check", action="store_true")

    cl = sub.add_parser("classify", parents=[common],
                        help="main classes per exact-symbol level (r <= 3)")
    cl.add_argument("r", type=int)

    sub.add_parser("verify-formulas", parents=[common],
                   help="check every closed-form identity against oracles")
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = RunConfig(command=args.command, fmt=args.format,
                        workers=args.workers, memo_budget=args.memo_budget,
                        max_size=args.max_size, out=args.out)
        if args.command == "table1":
            return cmd_table1(args.bound, cfg)
        if args.command == "table-sor":
            return cmd_table_sor(args.r, args.n, args.strategy,
                                 args.cross_check, cfg)
        if args.command == "classify":
            return cmd_classify(args.r, cfg)
        return cmd_verify_formulas(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapacityError, MemoryError) as exc:
        print(f"resource exhaustion: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
