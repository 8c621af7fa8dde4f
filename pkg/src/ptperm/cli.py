"""Command line front end: ``ptperm {count,verify,table,profile,bfile}``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from datetime import datetime, timezone
from pathlib import Path

from . import formulas, oracle, verify
from .core import ShapeError

EXIT_OK, EXIT_ANCHOR, EXIT_USAGE = 0, 1, 2

BFILE_STATS = {
    "zt-diag-half": lambda k: formulas.Zt_closed(k + 1, k) // 2,
    "zt-square": lambda k: formulas.Zt_closed(k, k),
    "z2": formulas.Z2_closed,
    "ze2-corrected": lambda k: formulas.Ze2_closed(k, "corrected"),
    "telephone": formulas.telephone,
}

CACHE_FIELDS = ("stat", "p", "q", "method", "value", "timestamp")


class UsageError(Exception):
    pass


def default_cache_path() -> Path:
    env = os.environ.get("PTPERM_CACHE")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "ptperm" / "counts.csv"


def write_cache(report: oracle.CountReport, path: Path | None = None) -> None:
    path = Path(path) if path else default_cache_path()
    path.parent.mkdir(parents=True, exist_ok=True)
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    with open(path, "a", newline="") as fh:
        csv.writer(fh, lineterminator="\n").writerow(
            [report.stat, report.p, report.q, report.method, str(report.value), stamp])


def read_cache(path: Path | None = None) -> list[dict]:
    path = Path(path) if path else default_cache_path()
    if not path.exists():
        return []
    with open(path, newline="") as fh:
        rows = []
        for rec in csv.reader(fh):
            if len(rec) != len(CACHE_FIELDS):
                continue
            row = dict(zip(CACHE_FIELDS, rec))
            row["p"], row["q"], row["value"] = int(row["p"]), int(row["q"]), int(row["value"])
            rows.append(row)
        return rows


def compute(stat, p, q, method, include_identity=True, jobs=1,
            naive_max_n=oracle.NAIVE_MAX_N, backtrack_max_p=oracle.BACKTRACK_MAX_P) -> oracle.CountReport:
    """Dispatch one count; raises ``UsageError`` for combinations that do not exist."""
    if stat not in oracle.STATS:
        raise UsageError(f"unknown stat {stat!r}")
    if p < 1 or q < 1:
        raise UsageError("p and q must be positive")
    if method == "oracle":
        return oracle.count_oracle(stat, p, q, include_identity=include_identity, jobs=jobs, max_n=naive_max_n)
    if method == "backtrack":
        if stat != "z":
            raise UsageError("the backtrack method only counts --stat z")
        return oracle.count_Z_backtrack(p, q, max_p=backtrack_max_p)
    if method == "formula":
        t0 = time.perf_counter()
        if stat == "z":
            value = formulas.Z_formula(p, q)
        elif stat == "ze":
            value = formulas.Ze_formula(p, q)
        else:
            if not include_identity:
                raise UsageError("--exclude-identity has no closed-form counterpart")
            value = formulas.Zt_closed(p, q)
        return oracle.CountReport(stat, p, q, "formula", value, time.perf_counter() - t0)
    raise UsageError(f"unknown method {method!r}")


def render_report(report: oracle.CountReport, fmt: str) -> str:
    if fmt == "plain":
        return f"{report.value}\n"
    d = report.as_dict()
    if fmt == "json":
        return json.dumps(d) + "\n"
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(d), lineterminator="\n")
    w.writeheader()
    w.writerow(d)
    return buf.getvalue()


def bfile_lines(stat: str, count: int) -> list[str]:
    if stat not in BFILE_STATS:
        raise UsageError(f"unknown b-file stat {stat!r}; choose from {sorted(BFILE_STATS)}")
    if count < 0:
        raise UsageError("--count must be nonnegative")
    fn = BFILE_STATS[stat]
    return [f"{k} {fn(k)}" for k in range(1, count + 1)]


def _cmd_count(args, out):
    report = compute(args.stat, args.p, args.q, args.method, include_identity=not args.exclude_identity,
                     jobs=args.jobs, naive_max_n=args.max_n, backtrack_max_p=args.max_p)
    out.write(render_report(report, args.format))
    if not args.no_cache:
        write_cache(report, args.cache)
    return EXIT_OK


def _cmd_verify(args, out):
    report = verify.run_verify(args.max_n, jobs=args.jobs)
    text = report.render()
    out.write(text)
    if args.report:
        path = Path(args.report)
        path.write_text(report.to_json() if path.suffix == ".json" else text)
    return EXIT_OK if report.ok else EXIT_ANCHOR


def _cmd_table(args, out):
    if args.n > 8:
        raise UsageError("table is limited to n <= 8")
    for word, prof, note in verify.table_rows(args.n, args.p):
        out.write(f"{word} {prof}" + (f"  # {note}" if note else "") + "\n")
    return EXIT_OK


def _cmd_profile(args, out):
    out.write(verify.profile_word(args.perm, args.p) + "\n")
    return EXIT_OK


def _cmd_bfile(args, out):
    text = "".join(line + "\n" for line in bfile_lines(args.stat, args.count))
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ptperm", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count one statistic")
    c.add_argument("--stat", required=True, choices=oracle.STATS)
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--method", default="formula", choices=("formula", "oracle", "backtrack"))
    c.add_argument("--exclude-identity", action="store_true")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--format", default="plain", choices=("plain", "csv", "json"))
    c.add_argument("--no-cache", action="store_true")
    c.add_argument("--cache", type=Path, default=None, help="cache file (default $PTPERM_CACHE)")
    c.add_argument("--max-n", type=int, default=oracle.NAIVE_MAX_N, help="naive oracle guard")
    c.add_argument("--max-p", type=int, default=oracle.BACKTRACK_MAX_P, help="backtrack guard")
    c.set_defaults(func=_cmd_count)

    v = sub.add_parser("verify", help="run the oracle/formula grid")
    v.add_argument("--max-n", type=int, required=True)
    v.add_argument("--report", default=None)
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=_cmd_verify)

    t = sub.add_parser("table", help="profile words of every permutation of [n]")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--p", type=int, required=True)
    t.set_defaults(func=_cmd_table)

    pr = sub.add_parser("profile", help="profile word of one permutation")
    pr.add_argument("--perm", required=True)
    pr.add_argument("--p", type=int, required=True)
    pr.set_defaults(func=_cmd_profile)

    b = sub.add_parser("bfile", help="write a 'k value' sequence file")
    b.add_argument("--stat", required=True)
    b.add_argument("--count", type=int, required=True)
    b.add_argument("--out", default=None)
    b.set_defaults(func=_cmd_bfile)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, oracle.GuardError, ShapeError, ValueError, IndexError) as e:
        print(f"ptperm {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
