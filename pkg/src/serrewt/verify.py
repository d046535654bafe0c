"""Exhaustive per-prime theorem checking over the enumerated parameter space.

Four checks, each producing a VerificationReport:

  main       serre_k = k_min_of_set = k_cris for every inertial parameter
  bm         bm_set = bdj_weight_set for every inertial parameter
  kmin       k_min_closed = k_min_search on the full (p-1) x p weight grid
  recursion  the symmetric-power recursion identity for n in [1, p-1] and
             k in [1, k_max], plus the periodic relation on n in [-2p, 4p]

plus an explicitly requested "brauer" check wrapping
oracle.verify_decomposition over N in [0, n_max].

run_suite partitions each check's work items across up to `jobs` processes;
failures are reported in item order and the aggregate JSON (timing fields
aside) is a pure function of (primes, checks), whatever the worker count.
All failures are collected rather than aborting at the first, so one run
documents the complete mismatch pattern.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import UnsupportedPrimeError
from .galois_params import InertialParam, enumerate_params, param_to_dict
from .oracle import DEFAULT_MAX_ORACLE_P, k_min_search, verify_decomposition
from .recipes import bdj_weight_set, bm_set, k_cris, k_min_of_set, serre_k
from .weights import SerreWeight, VirtualClass, is_odd_prime, k_min_closed, sym_class

ALL_CHECKS = ("main", "bm", "kmin", "recursion")
KNOWN_CHECKS = ALL_CHECKS + ("brauer",)


@dataclass
class VerificationReport:
    """Result of one check at one prime; empty failures means pass."""

    p: int
    check: str
    params_checked: int
    failures: List[Dict[str, object]] = field(default_factory=list)
    ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_obj(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "check": self.check,
            "params_checked": self.params_checked,
            "failures": self.failures,
            "ms": self.ms,
        }


# ---------------------------------------------------------------------------
# check definitions: items(p, opts) plus eval(p, item, opts) -> failure | None


def _eval_main(p: int, param: InertialParam) -> Optional[Dict[str, object]]:
    ks = serre_k(param)
    km = k_min_of_set(param)
    kc = k_cris(param)
    if ks == km == kc:
        return None
    return {
        "param": param_to_dict(param),
        "expected": ks,
        "actual": {"k_min": km, "k_cris": kc},
    }


def _eval_bm(p: int, param: InertialParam) -> Optional[Dict[str, object]]:
    w = bdj_weight_set(param)
    b = bm_set(param)
    if w == b:
        return None
    return {
        "param": param_to_dict(param),
        "expected": [x.to_json_obj() for x in w],
        "actual": [x.to_json_obj() for x in b],
    }


def _kmin_items(p: int) -> List[Tuple[int, int]]:
    return [(a, b) for a in range(p - 1) for b in range(1, p + 1)]


def _eval_kmin(p: int, item: Tuple[int, int]) -> Optional[Dict[str, object]]:
    a, b = item
    w = SerreWeight(p, a, b)
    closed = k_min_closed(w)
    scanned = k_min_search(p, w)
    if closed == scanned:
        return None
    return {"param": w.to_json_obj(), "expected": closed, "actual": scanned}


def _recursion_items(p: int, k_max: int) -> List[Tuple[str, int, int]]:
    items = [("lemma", n, k) for n in range(1, p) for k in range(1, k_max + 1)]
    items += [("periodic", n, 0) for n in range(-2 * p, 4 * p + 1)]
    return items


def _eval_recursion(p: int, item: Tuple[str, int, int]) -> Optional[Dict[str, object]]:
    kind, n, k = item
    if kind == "lemma":
        lhs = sym_class(p, n + k * (p - 1))
        rhs = (
            sym_class(p, n)
            + VirtualClass.of_weight(SerreWeight.reduced(p, n, p - n))
            + sym_class(p, n + (k - 1) * (p - 1) - 2).twist(1)
        )
    else:
        lhs = sym_class(p, n + p - 1) - sym_class(p, n)
        rhs = (sym_class(p, n - 2) - sym_class(p, n - p - 1)).twist(1)
    if lhs == rhs:
        return None
    return {
        "param": {"identity": kind, "n": n, "k": k},
        "expected": rhs.to_json_obj(),
        "actual": lhs.to_json_obj(),
    }


def _eval_brauer(p: int, N: int) -> Optional[Dict[str, object]]:
    report = verify_decomposition(p, N)
    if report.passed:
        return None
    return {
        "param": {"N": N},
        "expected": "character match on all classes",
        "actual": report.failures,
    }


def _items_for(check: str, p: int, opts: Tuple[int, int]) -> Sequence[object]:
    k_max, brauer_n_max = opts
    if check in ("main", "bm"):
        return enumerate_params(p)
    if check == "kmin":
        return _kmin_items(p)
    if check == "recursion":
        return _recursion_items(p, k_max)
    if check == "brauer":
        return list(range(brauer_n_max + 1))
    raise ValueError(f"unknown check {check!r}")


_EVALS = {
    "main": _eval_main,
    "bm": _eval_bm,
    "kmin": _eval_kmin,
    "recursion": _eval_recursion,
    "brauer": _eval_brauer,
}


def _eval_slice(args: Tuple[str, int, int, int, Tuple[int, int]]) -> List[Dict[str, object]]:
    """Worker entry: evaluate items[lo:hi] of a check, in order."""
    check, p, lo, hi, opts = args
    items = _items_for(check, p, opts)
    ev = _EVALS[check]
    out = []
    for item in items[lo:hi]:
        failure = ev(p, item)
        if failure is not None:
            out.append(failure)
    return out


def _run_check(check: str, p: int, jobs: int = 1, k_max: Optional[int] = None,
               brauer_n_max: Optional[int] = None) -> VerificationReport:
    if not is_odd_prime(p):
        raise UnsupportedPrimeError(f"only odd primes are supported, got {p}")
    opts = (k_max if k_max is not None else 3 * p,
            brauer_n_max if brauer_n_max is not None else 3 * p * p)
    items = _items_for(check, p, opts)
    start = time.perf_counter()
    if jobs <= 1 or len(items) < 2 * jobs:
        failures = _eval_slice((check, p, 0, len(items), opts))
    else:
        chunk = -(-len(items) // jobs)
        bounds = [(lo, min(lo + chunk, len(items))) for lo in range(0, len(items), chunk)]
        tasks = [(check, p, lo, hi, opts) for lo, hi in bounds]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            failures = [f for part in pool.map(_eval_slice, tasks) for f in part]
    ms = int(round(1000 * (time.perf_counter() - start)))
    return VerificationReport(p, check, len(items), failures, ms)


# ---------------------------------------------------------------------------
# public checkers


def check_main_theorem(p: int) -> VerificationReport:
    """serre_k = k_min_of_set = k_cris over the whole parameter space at p."""
    return _run_check("main", p)


def check_bm_equals_bdj(p: int) -> VerificationReport:
    """bm_set = bdj_weight_set over the whole parameter space at p."""
    return _run_check("bm", p)


def check_kmin_formula(p: int) -> VerificationReport:
    """Closed-form minimal weight equals the scan oracle on all (p-1)p weights."""
    return _run_check("kmin", p)


def check_recursion_lemma(p: int, k_max: Optional[int] = None) -> VerificationReport:
    """Symmetric-power recursion identity and periodic relation at p."""
    return _run_check("recursion", p, k_max=k_max)


def expected_param_count(p: int) -> int:
    """Enumeration size: p(p-1)/2 irreducible plus (p-1)(4(p-1)+1) reducible."""
    return p * (p - 1) // 2 + (p - 1) * (4 * (p - 1) + 1)


def run_suite(
    primes: Sequence[int],
    checks: Sequence[str] | str = "all",
    jobs: int = 1,
    k_max: Optional[int] = None,
    brauer_n_max: Optional[int] = None,
    oracle_max_p: int = DEFAULT_MAX_ORACLE_P,
) -> Dict[str, object]:
    """Run the selected checks over the given primes.

    `checks` is "all" (the four standard checks) or a list of names from
    main/bm/kmin/recursion/brauer; "brauer" must be requested explicitly
    and its primes must not exceed oracle_max_p.  Returns the aggregate
    {"runs": [...], "pass": bool}; apart from the per-run "ms" field the
    aggregate depends only on (primes, checks, k_max, brauer_n_max).
    """
    if isinstance(checks, str):
        names = list(ALL_CHECKS) if checks == "all" else [checks]
    else:
        names = list(ALL_CHECKS) if list(checks) == ["all"] else list(checks)
    for name in names:
        if name not in KNOWN_CHECKS:
            raise ValueError(f"unknown check {name!r}; known: {', '.join(KNOWN_CHECKS)}")
    for p in primes:
        if p == 2:
            raise UnsupportedPrimeError("p = 2 is not supported; the recipes differ there")
        if not is_odd_prime(p):
            raise UnsupportedPrimeError(f"{p} is not an odd prime")
        if "brauer" in names and p > oracle_max_p:
            raise ValueError(
                f"brauer check capped at p <= {oracle_max_p} (pass oracle_max_p to raise)"
            )
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    runs = []
    for p in primes:
        for name in names:
            runs.append(
                _run_check(name, p, jobs=jobs, k_max=k_max, brauer_n_max=brauer_n_max)
            )
    return {
        "runs": [r.to_json_obj() for r in runs],
        "pass": all(r.passed for r in runs),
    }
