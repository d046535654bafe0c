"""The three minimal-weight recipes and the two weight-set recipes.

Given an inertial parameter this module computes:

  * serre_k: Serre's minimal classical weight k(rho);
  * bdj_weight_set: the Buzzard-Diamond-Jarvis set W(rho) of Serre weights,
    and k_min_of_set, the least k >= 2 such that some member of W(rho)
    occurs in Sym^(k-2);
  * kisin_mu: Kisin's multiplicities mu_(n,m)(rho) from the Breuil-Mezard
    conjecture, the set B(rho) of weights with mu > 0 (bm_set), the
    conjectural Hilbert-Samuel multiplicity of the mod-p weight-k
    crystalline deformation ring (bm_multiplicity), and the least weight
    k_cris with a nonzero multiplicity.

The classical theorems assert serre_k = k_min_of_set = k_cris and
bm_set = bdj_weight_set for every parameter; the verify module checks this
exhaustively per prime.

Conventions used by serre_k.  For a split (semisimple) record the two
inertia exponents are both reduced into [0, p-2] and the smaller one is the
twist; the pair (0, 0) maps to weight p because weight 1 is excluded.  For
a non-split record the extension forces which character is the
subrepresentation, and its exponent is represented in [1, p-1] (never 0),
matching the classical choice of representatives; the two normalizations
differ exactly when twist + ratio = 0 mod p-1.  When the ratio is omega
(ratio 1), non-split records take the peu value twist*(p+1) + 2 unless
tres ramifiee, which takes twist*(p+1) + p + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .errors import InternalInvariantError, LevelOneError
from .galois_params import (
    SHAPE_NONSPLIT,
    SHAPE_PEU,
    SHAPE_SPLIT,
    SHAPE_TRES,
    InertialParam,
    Irreducible,
    Reducible,
    normalize_level2,
    param_to_dict,
)
from .weights import SerreWeight, jh_multiplicity, k_min_closed

WeightSet = Tuple[SerreWeight, ...]


def serre_k(param: InertialParam) -> int:
    """Serre's minimal weight k(rho) of the parameter."""
    p = param.p
    if isinstance(param, Irreducible):
        return p * param.a + param.b + 1
    m, r, shape = param.twist, param.ratio, param.shape
    if shape == SHAPE_TRES:
        return (m + 1) * (p + 1)
    if shape == SHAPE_PEU or (shape == SHAPE_NONSPLIT and r == 1):
        return m * (p + 1) + 2
    if shape == SHAPE_SPLIT:
        x, y = m, (m + r) % (p - 1)
        a, b = min(x, y), max(x, y)
        if (a, b) == (0, 0):
            return p
        return p * a + b + 1
    # generic non-split: the sub-character exponent lives in [1, p-1]
    beta = ((m + r - 1) % (p - 1)) + 1
    a, b = min(m, beta), max(m, beta)
    return p * a + b + 1


def _weight_row(param: Reducible) -> List[Tuple[int, int]]:
    """Untwisted W(rho) row for a reducible record, as (a, b) pairs.

    Keyed on bb, the ratio represented in [1, p-1], the shape, and p.
    """
    p, r, shape = param.p, param.ratio, param.shape
    bb = r if r >= 1 else p - 1
    if bb == p - 1:
        return [(0, p - 1)]
    if bb == 1:
        if shape == SHAPE_TRES:
            return [(0, p)]
        if shape == SHAPE_SPLIT and p > 3:
            return [(0, p), (0, 1), (1, p - 2)]
        if shape == SHAPE_SPLIT:  # p == 3
            return [(0, 3), (0, 1), (1, 3), (1, 1)]
        return [(0, p), (0, 1)]  # peu, or non-split with unequal lambdas
    if shape == SHAPE_SPLIT:
        if bb == p - 2:  # reachable only for p > 3
            return [(0, p - 2), (p - 2, p), (p - 2, 1)]
        return [(0, bb), (bb, p - 1 - bb)]
    return [(0, bb)]


def bdj_weight_set(param: InertialParam) -> WeightSet:
    """The set W(rho) of Serre weights, canonically ordered by (a, b)."""
    p = param.p
    if isinstance(param, Irreducible):
        s = param.b - param.a
        base = [(0, s), (s - 1, p + 1 - s)]
        t = param.a
    else:
        base = _weight_row(param)
        t = param.twist
    weights = sorted(SerreWeight.reduced(p, a + t, b) for a, b in base)
    assert len(set(weights)) == len(weights)
    return tuple(weights)


def k_min_of_set(param: InertialParam) -> int:
    """min over W(rho) of k_min_closed; the least k with W(rho) meeting
    the factors of Sym^(k-2)."""
    return min(k_min_closed(w) for w in bdj_weight_set(param))


def kisin_mu(param: InertialParam, n: int, m: int) -> int:
    """Kisin's multiplicity mu_(n,m)(rho), for (n, m) in [0,p-1] x [0,p-2].

    An irreducible parameter matches the cell whose level-2 exponent
    m(p+1) + n + 1 normalizes to its own (a, b); the match contributes 1.
    A reducible parameter matches when rho can be written as
    omega^m (x) (upper-triangular with sub-character omega^(n+1) times
    unramified); for split records both orderings of the two characters are
    tried, and exponents are compared mod p-1 (so ratio omega matches both
    n = 0 and n = p-1).  A match contributes 1 except in four cases:
    peu-or-trivial extensions with equal lambdas count 2 at n = p-1,
    tres ramifiee counts 0 at n = 0, and split records at n = p-2 count 2
    (unequal lambdas) or 4 (equal lambdas).
    """
    p = param.p
    if not 0 <= n <= p - 1:
        raise ValueError(f"n={n} outside [0, {p - 1}]")
    if not 0 <= m <= p - 2:
        raise ValueError(f"m={m} outside [0, {p - 2}]")
    if isinstance(param, Irreducible):
        try:
            ab = normalize_level2(p, m * (p + 1) + n + 1)
        except LevelOneError:
            return 0
        return 1 if ab == (param.a, param.b) else 0

    m0, r, shape, lam = param.twist, param.ratio, param.shape, param.lambda_equal
    q = p - 1
    if shape == SHAPE_SPLIT:
        matched = (m == m0 and (n + 1) % q == r) or (
            m == (m0 + r) % q and (n + 1) % q == (-r) % q
        )
    else:
        matched = m == m0 and (n + 1) % q == r
    if not matched:
        return 0
    if n == p - 1 and lam and shape in (SHAPE_SPLIT, SHAPE_PEU):
        return 2
    if n == 0 and shape == SHAPE_TRES:
        return 0
    if n == p - 2 and shape == SHAPE_SPLIT:
        return 4 if lam else 2
    return 1


def _candidate_cells(param: InertialParam) -> List[Tuple[int, int]]:
    """The (n, m) cells a parameter can match, from the congruences.

    At most 2 cells for irreducible or non-split records and at most 4 for
    split ones; every cell outside this list has mu = 0.  Equivalence with
    the cell-by-cell recipe is property-tested.
    """
    p = param.p
    cells = set()
    if isinstance(param, Irreducible):
        for e in (p * param.a + param.b, param.a + p * param.b):
            mm, rem = divmod(e, p + 1)
            cells.add((rem - 1, mm))
        return sorted(cells)
    q = p - 1
    presentations = [(param.twist, param.ratio)]
    if param.shape == SHAPE_SPLIT:
        presentations.append(((param.twist + param.ratio) % q, (-param.ratio) % q))
    for mm, rr in presentations:
        if rr == 0:
            ns = (p - 2,)
        elif rr == 1:
            ns = (0, p - 1)
        else:
            ns = (rr - 1,)
        cells.update((n, mm) for n in ns)
    return sorted(cells)


def mu_support(param: InertialParam) -> List[Tuple[int, int, int]]:
    """All (n, m, mu) with mu = kisin_mu(param, n, m) > 0, sorted by (n, m)."""
    out = []
    for n, m in _candidate_cells(param):
        mu = kisin_mu(param, n, m)
        if mu > 0:
            out.append((n, m, mu))
    return out


@dataclass(frozen=True)
class MuTable:
    """The full array of Kisin multiplicities, entries[n][m]."""

    p: int
    entries: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, param: InertialParam) -> "MuTable":
        p = param.p
        rows = tuple(
            tuple(kisin_mu(param, n, m) for m in range(p - 1)) for n in range(p)
        )
        return cls(p, rows)

    def nonzero(self) -> List[Tuple[int, int, int]]:
        return [
            (n, m, mu)
            for n, row in enumerate(self.entries)
            for m, mu in enumerate(row)
            if mu
        ]


def mu_table(param: InertialParam) -> MuTable:
    """Evaluate Kisin's recipe on every cell (slower than mu_support)."""
    return MuTable.of(param)


def bm_set(param: InertialParam) -> WeightSet:
    """B(rho) = { V(m, n+1) : mu_(n,m)(rho) > 0 }, ordered by (a, b)."""
    weights = sorted(
        SerreWeight(param.p, m, n + 1) for n, m, _ in mu_support(param)
    )
    return tuple(weights)


def _weighted_jh_sum(p: int, k: int, support: List[Tuple[int, int, int]]) -> int:
    return sum(
        jh_multiplicity(p, k, SerreWeight(p, m, n + 1)) * mu for n, m, mu in support
    )


def bm_multiplicity(param: InertialParam, k: int) -> int:
    """Right-hand side of the Breuil-Mezard formula at trivial type:
    sum over (n, m) of (multiplicity of V(m, n+1) in Sym^(k-2)) * mu_(n,m)."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return _weighted_jh_sum(param.p, k, mu_support(param))


def k_cris(param: InertialParam) -> int:
    """Least k >= 2 with bm_multiplicity(param, k) > 0.

    The scan is bounded by p^2; exhausting it contradicts the non-emptiness
    of B(rho) and raises InternalInvariantError.  Weights occurring in
    Sym^(k-2) have central character k - 2 mod p-1, so k outside the
    residues of the support weights is skipped without evaluating the sum.
    """
    p = param.p
    support = mu_support(param)
    if not support:
        raise InternalInvariantError(f"empty Breuil-Mezard support for {param}")
    residues = {(2 * m + n) % (p - 1) for n, m, _ in support}
    for k in range(2, p * p + 1):
        if (k - 2) % (p - 1) not in residues:
            continue
        if _weighted_jh_sum(p, k, support) > 0:
            return k
    raise InternalInvariantError(f"no weight k <= p^2 found for {param}")


def weight_report(param: InertialParam) -> Dict[str, object]:
    """All recipe outputs for one parameter, JSON-ready."""
    return {
        "param": param_to_dict(param),
        "k_serre": serre_k(param),
        "k_min": k_min_of_set(param),
        "k_cris": k_cris(param),
        "W": [w.to_json_obj() for w in bdj_weight_set(param)],
        "B": [w.to_json_obj() for w in bm_set(param)],
        "mu_nonzero": [{"n": n, "m": m, "mu": mu} for n, m, mu in mu_support(param)],
    }
