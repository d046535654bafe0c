#!/usr/bin/env python3
"""Full reproduction run: every theorem check at every configured prime.

Runs the four standard checks (main theorem, weight-set equality, minimal
weight formula, recursion identities) for all odd primes up to --max-p, and
the Brauer-character certification of the symmetric-power decomposition for
primes up to --brauer-max-p with N up to 3p^2.  Writes one aggregate JSON
report and prints a summary line per (prime, check).

Example:

    python scripts/reproduce_theorems.py --max-p 47 --out reports/full.json
"""

import argparse
import json
import sys
import time
from pathlib import Path

from serrewt.verify import run_suite
from serrewt.weights import is_odd_prime


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-p", type=int, default=47,
                    help="largest prime for the standard checks (default 47)")
    ap.add_argument("--brauer-max-p", type=int, default=13,
                    help="largest prime for the Brauer certification (default 13)")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path, default=None,
                    help="write the aggregate JSON report here")
    args = ap.parse_args()

    primes = [p for p in range(3, args.max_p + 1) if is_odd_prime(p)]
    brauer_primes = [p for p in primes if p <= args.brauer_max_p]

    start = time.perf_counter()
    aggregate = run_suite(primes, "all", jobs=args.jobs)
    brauer = run_suite(brauer_primes, ["brauer"], jobs=args.jobs,
                       oracle_max_p=max(brauer_primes, default=31))
    aggregate["runs"].extend(brauer["runs"])
    aggregate["pass"] = aggregate["pass"] and brauer["pass"]
    elapsed = time.perf_counter() - start

    for run in aggregate["runs"]:
        status = "PASS" if not run["failures"] else f"FAIL ({len(run['failures'])})"
        print(f"p={run['p']:>3} {run['check']:<9} {run['params_checked']:>6} checked "
              f"{run['ms']:>7} ms  {status}")
    print(f"total: {elapsed:.1f} s, overall {'PASS' if aggregate['pass'] else 'FAIL'}")

    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(json.dumps(aggregate, indent=1) + "\n")
        print(f"report written to {args.out}")
    return 0 if aggregate["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
