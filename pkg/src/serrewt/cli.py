"""Command-line frontend.

Subcommands:

  decompose   Jordan-Holder factors of Sym^N
  kmin        minimal weight of a single Serre weight (closed form,
              optionally cross-checked against the scan oracle)
  weights     all recipe outputs for one inertial parameter (JSON input)
  verify      exhaustive per-prime theorem checks
  table       one row per inertial parameter at a prime

Common flags: --format {table|json|csv}, --out PATH, --jobs N.  Exit codes:
0 success / all checks pass, 1 a verification check found counterexamples,
2 usage or schema errors (including p = 2 and I/O problems), 3 breached
internal invariant.  Environment: SERREWT_JOBS (default worker count),
SERREWT_MAX_P (default upper end of the verify prime range); flags always
win over the environment.

Output is deterministic byte-for-byte for fixed inputs except for the "ms"
timing fields of verification reports.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Dict, List, Optional, Sequence

from .errors import InternalInvariantError, LevelOneError, ParamError, UnsupportedPrimeError
from .galois_params import enumerate_params, parse_param
from .oracle import DEFAULT_MAX_ORACLE_P, k_min_search
from .recipes import weight_report
from .verify import run_suite
from .weights import SerreWeight, decompose_sym, is_odd_prime, k_min_closed

DEFAULT_MAX_P = 47
FORMATS = ("table", "json", "csv")

TABLE_CSV_COLUMNS = (
    "type,a,b,twist,ratio,shape,lambda_equal,"
    "k_serre,k_min,k_cris,n_weights,W,B,k_equal,sets_equal"
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"environment variable {name} must be an integer, got {raw!r}")


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--out", metavar="PATH", default=None)
    common.add_argument("--jobs", type=int, default=None, metavar="N")

    top = _Parser(prog="serrewt", description=__doc__,
                  formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = top.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", parents=[common],
                       help="Jordan-Holder factors of Sym^N")
    d.add_argument("-p", type=int, required=True)
    d.add_argument("-N", type=int, required=True)

    k = sub.add_parser("kmin", parents=[common],
                       help="minimal weight of V(a,b)")
    k.add_argument("-p", type=int, required=True)
    k.add_argument("-a", type=int, required=True)
    k.add_argument("-b", type=int, required=True)
    k.add_argument("--search", action="store_true",
                   help="also run the scan oracle and report agreement")

    w = sub.add_parser("weights", parents=[common],
                       help="k values and weight sets for one parameter")
    w.add_argument("param", metavar="PARAM_JSON",
                   help="inertial parameter as a JSON object")

    v = sub.add_parser("verify", parents=[common],
                       help="run exhaustive theorem checks")
    v.add_argument("-p", dest="prime_range", default=None, metavar="RANGE",
                   help="prime, comma list, or A..B range (default 3..SERREWT_MAX_P)")
    v.add_argument("--checks", default="all",
                   help="comma list of main,bm,kmin,recursion,brauer or 'all'")
    v.add_argument("--k-max", type=int, default=None,
                   help="recursion check upper bound (default 3p)")
    v.add_argument("--brauer-n-max", type=int, default=None,
                   help="brauer check symmetric-power bound (default 3p^2)")
    v.add_argument("--oracle-max-p", type=int, default=DEFAULT_MAX_ORACLE_P,
                   help="largest prime the brauer check accepts")

    t = sub.add_parser("table", parents=[common],
                       help="full per-prime table of all parameters")
    t.add_argument("-p", type=int, required=True)

    return top


def _parse_prime_range(spec: Optional[str]) -> List[int]:
    if spec is None:
        hi = _env_int("SERREWT_MAX_P", DEFAULT_MAX_P)
        return [p for p in range(3, hi + 1) if is_odd_prime(p)]
    spec = spec.strip()
    if ".." in spec:
        lo_s, _, hi_s = spec.partition("..")
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise _UsageError(f"malformed prime range {spec!r}")
        if lo > hi:
            raise _UsageError(f"empty prime range {spec!r}")
        if lo <= 2 <= hi:
            raise UnsupportedPrimeError("p = 2 is not supported; start the range at 3")
        return [p for p in range(max(lo, 3), hi + 1) if is_odd_prime(p)]
    primes = []
    for part in spec.split(","):
        try:
            p = int(part)
        except ValueError:
            raise _UsageError(f"malformed prime {part!r}")
        if p == 2:
            raise UnsupportedPrimeError("p = 2 is not supported")
        if not is_odd_prime(p):
            raise _UsageError(f"{p} is not an odd prime")
        primes.append(p)
    return primes


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")


def _csv_text(rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _weights_str(objs: List[Dict[str, int]]) -> str:
    return " ".join(f"V({o['a']},{o['b']})" for o in objs)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_decompose(args: argparse.Namespace) -> int:
    if not is_odd_prime(args.p):
        raise _UsageError(f"-p must be an odd prime, got {args.p}")
    if args.N < 0:
        raise _UsageError(f"-N must be >= 0, got {args.N}")
    factors = sorted(decompose_sym(args.p, args.N).items(),
                     key=lambda kv: (kv[0].a, kv[0].b))
    if args.format == "csv":
        _emit(_csv_text([(w.a, w.b, mult) for w, mult in factors]), args.out)
    elif args.format == "json":
        obj = [{"a": w.a, "b": w.b, "mult": mult} for w, mult in factors]
        _emit(json.dumps(obj), args.out)
    else:
        lines = [f"{w} x {mult}" for w, mult in factors]
        total = sum(mult * w.b for w, mult in factors)
        ok = "ok" if total == args.N + 1 else "MISMATCH"
        lines.append(f"dimension check: sum mult*b = {total} = N+1 [{ok}]")
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_kmin(args: argparse.Namespace) -> int:
    if not is_odd_prime(args.p):
        raise _UsageError(f"-p must be an odd prime, got {args.p}")
    try:
        w = SerreWeight(args.p, args.a, args.b)
    except ValueError as exc:
        raise _UsageError(str(exc))
    closed = k_min_closed(w)
    if args.search:
        scanned = k_min_search(args.p, w)
        agree = "match" if closed == scanned else "MISMATCH"
        if args.format == "json":
            obj = {"p": args.p, "a": args.a, "b": args.b, "k_min": closed,
                   "k_min_search": scanned, "match": closed == scanned}
            _emit(json.dumps(obj), args.out)
        elif args.format == "csv":
            _emit(_csv_text([(args.p, args.a, args.b, closed, scanned, agree)]), args.out)
        else:
            _emit(f"{closed}, {scanned}, {agree}", args.out)
        return 0 if closed == scanned else 3
    if args.format == "json":
        _emit(json.dumps({"p": args.p, "a": args.a, "b": args.b, "k_min": closed}), args.out)
    elif args.format == "csv":
        _emit(_csv_text([(args.p, args.a, args.b, closed)]), args.out)
    else:
        _emit(str(closed), args.out)
    return 0


def _param_row(report: Dict[str, object]) -> Dict[str, object]:
    param = report["param"]
    ks, km, kc = report["k_serre"], report["k_min"], report["k_cris"]
    w_objs, b_objs = report["W"], report["B"]
    row: Dict[str, object] = {
        "type": param["type"],
        "a": param.get("a", ""),
        "b": param.get("b", ""),
        "twist": param.get("twist", ""),
        "ratio": param.get("ratio", ""),
        "shape": param.get("shape", ""),
        "lambda_equal": param.get("lambda_equal", ""),
        "k_serre": ks,
        "k_min": km,
        "k_cris": kc,
        "n_weights": len(w_objs),
        "W": _weights_str(w_objs),
        "B": _weights_str(b_objs),
        "k_equal": ks == km == kc,
        "sets_equal": w_objs == b_objs,
    }
    return row


def _cmd_weights(args: argparse.Namespace) -> int:
    param = parse_param(args.param)
    report = weight_report(param)
    if args.format == "json":
        _emit(json.dumps(report), args.out)
    elif args.format == "csv":
        row = _param_row(report)
        cols = TABLE_CSV_COLUMNS.split(",")
        _emit(_csv_text([cols, [row[c] for c in cols]]), args.out)
    else:
        lines = [
            f"param:  {json.dumps(report['param'])}",
            f"k_serre: {report['k_serre']}",
            f"k_min:   {report['k_min']}",
            f"k_cris:  {report['k_cris']}",
            f"W: {_weights_str(report['W'])}",
            f"B: {_weights_str(report['B'])}",
            "mu_nonzero: "
            + ", ".join(f"(n={e['n']}, m={e['m']}) -> {e['mu']}"
                        for e in report["mu_nonzero"]),
        ]
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    primes = _parse_prime_range(args.prime_range)
    checks = args.checks if args.checks == "all" else args.checks.split(",")
    jobs = args.jobs if args.jobs is not None else _env_int("SERREWT_JOBS", os.cpu_count() or 1)
    try:
        aggregate = run_suite(
            primes,
            checks,
            jobs=jobs,
            k_max=args.k_max,
            brauer_n_max=args.brauer_n_max,
            oracle_max_p=args.oracle_max_p,
        )
    except ValueError as exc:
        raise _UsageError(str(exc))
    if args.format == "json":
        _emit(json.dumps(aggregate), args.out)
    elif args.format == "csv":
        rows = [
            (r["p"], r["check"], r["params_checked"], len(r["failures"]), r["ms"])
            for r in aggregate["runs"]
        ]
        _emit(_csv_text(rows), args.out)
    else:
        lines = []
        for r in aggregate["runs"]:
            status = "PASS" if not r["failures"] else f"FAIL ({len(r['failures'])})"
            lines.append(
                f"p={r['p']:>3} {r['check']:<9} {r['params_checked']:>6} checked  "
                f"{r['ms']:>6} ms  {status}"
            )
        lines.append("all checks passed" if aggregate["pass"] else "FAILURES FOUND")
        _emit("\n".join(lines), args.out)
    return 0 if aggregate["pass"] else 1


def _cmd_table(args: argparse.Namespace) -> int:
    if not is_odd_prime(args.p):
        raise _UsageError(f"-p must be an odd prime, got {args.p}")
    rows = [_param_row(weight_report(param)) for param in enumerate_params(args.p)]
    cols = TABLE_CSV_COLUMNS.split(",")
    if args.format == "json":
        _emit(json.dumps(rows), args.out)
    elif args.format == "csv":
        _emit(_csv_text([cols] + [[row[c] for c in cols] for row in rows]), args.out)
    else:
        widths = {c: max(len(c), max(len(str(row[c])) for row in rows)) for c in cols}
        lines = ["  ".join(c.ljust(widths[c]) for c in cols)]
        for row in rows:
            lines.append("  ".join(str(row[c]).ljust(widths[c]) for c in cols))
        _emit("\n".join(lines), args.out)
    return 0


_DISPATCH = {
    "decompose": _cmd_decompose,
    "kmin": _cmd_kmin,
    "weights": _cmd_weights,
    "verify": _cmd_verify,
    "table": _cmd_table,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParamError, LevelOneError, UnsupportedPrimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        print(f"internal invariant breached: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
