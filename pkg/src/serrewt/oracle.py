"""Independent verification paths for the weight combinatorics.

Two oracles, deliberately separate from the code they certify:

  * Brauer characters.  On a conjugacy class of order prime to p the
    character of a mod-p representation of GL2(F_p), with eigenvalues
    lifted through the Teichmuller map to (p^2-1)-th roots of unity, is a
    class function that is linearly independent across the p(p-1)
    irreducibles.  Checking, class by class, that the character of Sym^N
    equals the character sum of its claimed Jordan-Holder factors therefore
    certifies the decomposition.  Equality is decided exactly in the ring
    Z[x]/Phi_n(x) with n = p^2 - 1 (working modulo x^n - 1 instead would
    produce false negatives, since distinct exponent multisets can agree
    at a primitive root).

  * Brute-force minimal weight.  k_min_search scans Sym^0, Sym^1, ... for
    the first occurrence of a weight, independent of the closed form.

Eigenvalue lifting fixes the field with p^2 elements as F_p[t]/(f) where f
is the lexicographically smallest irreducible monic quadratic (ordered by
(linear coefficient, constant)), encodes the element c0 + c1*t as the
integer c0 + p*c1, picks the generator g with the smallest encoding, and
maps g to the residue x in Z[x]/Phi_n.  Discrete logarithms are read from
a table of the powers of g, so the oracles are intended for desk-scale
primes (p <= 31 by default; the ring degree is phi(p^2 - 1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple, Union

import numpy as np

from .errors import InternalInvariantError
from .weights import SerreWeight, _decompose, is_odd_prime, jh_multiplicity

DEFAULT_MAX_ORACLE_P = 31

# ---------------------------------------------------------------------------
# exact integer polynomials (little-endian coefficient tuples)


def _poly_trim(c: List[int]) -> Tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul(f: Tuple[int, ...], g: Tuple[int, ...]) -> Tuple[int, ...]:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _poly_trim(out)


def _poly_divmod(num: Tuple[int, ...], den: Tuple[int, ...]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Quotient and remainder; den must be monic."""
    assert den and den[-1] == 1
    rem = list(num)
    dd = len(den) - 1
    quo = [0] * max(len(rem) - dd, 0)
    for top in range(len(rem) - 1, dd - 1, -1):
        c = rem[top]
        if c:
            quo[top - dd] = c
            for i in range(dd + 1):
                rem[top - dd + i] -= c * den[i]
    return _poly_trim(quo), _poly_trim(rem)


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> Tuple[int, ...]:
    """The n-th cyclotomic polynomial, exact, little-endian, monic.

    Computed as (x^n - 1) divided by the product of Phi_d over proper
    divisors d of n; the division is exact over the integers.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    num = tuple([-1] + [0] * (n - 1) + [1])
    den: Tuple[int, ...] = (1,)
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, cyclotomic_poly(d))
    quo, rem = _poly_divmod(num, den)
    assert rem == (), f"inexact cyclotomic division at n={n}"
    return quo


def _phi_degree(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


def _reduce_mod_phi(n: int, coeffs: List[int]) -> Tuple[int, ...]:
    phi = cyclotomic_poly(n)
    _, rem = _poly_divmod(_poly_trim(list(coeffs)), phi)
    deg = len(phi) - 1
    return tuple(rem) + (0,) * (deg - len(rem))


@dataclass(frozen=True)
class CyclotomicElement:
    """An element of Z[x]/Phi_n(x), stored as phi(n) exact coefficients."""

    n: int
    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != _phi_degree(self.n):
            raise ValueError("coefficient vector has the wrong length")

    def _check(self, other: "CyclotomicElement") -> None:
        if self.n != other.n:
            raise ValueError("mixed cyclotomic moduli")

    def __add__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        self._check(other)
        return CyclotomicElement(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        self._check(other)
        return CyclotomicElement(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CyclotomicElement":
        return CyclotomicElement(self.n, tuple(-a for a in self.coeffs))

    def __mul__(self, other: Union["CyclotomicElement", int]) -> "CyclotomicElement":
        if isinstance(other, int):
            return CyclotomicElement(self.n, tuple(other * a for a in self.coeffs))
        self._check(other)
        prod = _poly_mul(self.coeffs, other.coeffs)
        return CyclotomicElement(self.n, _reduce_mod_phi(self.n, list(prod)))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def cyclo_zero(n: int) -> CyclotomicElement:
    return CyclotomicElement(n, (0,) * _phi_degree(n))


def cyclo_one(n: int) -> CyclotomicElement:
    return zeta_power(n, 0)


def zeta_power(n: int, j: int) -> CyclotomicElement:
    """x^j in Z[x]/Phi_n, j taken modulo n."""
    j %= n
    return CyclotomicElement(n, _reduce_mod_phi(n, [0] * j + [1]))


def _element_from_exponent_counts(n: int, counts: Dict[int, int]) -> CyclotomicElement:
    dense = [0] * n
    for j, c in counts.items():
        dense[j % n] += c
    return CyclotomicElement(n, _reduce_mod_phi(n, dense))


# ---------------------------------------------------------------------------
# the field with p^2 elements, its generator, and discrete logs


def _smallest_irreducible_quadratic(p: int) -> Tuple[int, int]:
    """(c, d) with t^2 + c t + d irreducible over F_p, smallest (c, d)."""
    for c in range(p):
        for d in range(p):
            if all((x * x + c * x + d) % p for x in range(p)):
                return c, d
    raise InternalInvariantError(f"no irreducible quadratic over F_{p}")


def _prime_factors(n: int) -> List[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def _dlog_table(p: int) -> Dict[int, int]:
    """encoding(c0 + c1 t) = c0 + p c1  ->  discrete log base the generator."""
    if not is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    c, d = _smallest_irreducible_quadratic(p)
    n = p * p - 1

    def mul(u: Tuple[int, int], v: Tuple[int, int]) -> Tuple[int, int]:
        u0, u1 = u
        v0, v1 = v
        cross = u1 * v1
        return ((u0 * v0 - d * cross) % p, (u0 * v1 + u1 * v0 - c * cross) % p)

    def power(u: Tuple[int, int], e: int) -> Tuple[int, int]:
        acc = (1, 0)
        while e:
            if e & 1:
                acc = mul(acc, u)
            u = mul(u, u)
            e >>= 1
        return acc

    factors = _prime_factors(n)
    gen = None
    for enc in range(1, p * p):
        cand = (enc % p, enc // p)
        if all(power(cand, n // q) != (1, 0) for q in factors):
            gen = cand
            break
    assert gen is not None
    table: Dict[int, int] = {}
    elt = (1, 0)
    for k in range(n):
        table[elt[0] + p * elt[1]] = k
        elt = mul(elt, gen)
    assert len(table) == n
    return table


def field_log(p: int, x: int) -> int:
    """Discrete log of x in F_p^* under the embedding into the p^2 field."""
    if not 1 <= x <= p - 1:
        raise ValueError(f"x={x} is not a unit of F_{p}")
    return _dlog_table(p)[x]


# ---------------------------------------------------------------------------
# p-regular classes and Brauer characters


@dataclass(frozen=True, order=True)
class CentralClass:
    """Scalar matrix diag(x, x), x a unit of F_p."""

    p: int
    x: int


@dataclass(frozen=True, order=True)
class SplitClass:
    """diag(x, y) with distinct units x < y of F_p."""

    p: int
    x: int
    y: int


@dataclass(frozen=True, order=True)
class NonsplitClass:
    """Eigenvalues g^j, g^(pj) outside F_p; j is the smaller of the orbit
    {j, pj mod p^2-1} and is never divisible by p+1."""

    p: int
    j: int


PRegularClass = Union[CentralClass, SplitClass, NonsplitClass]


@lru_cache(maxsize=None)
def p_regular_classes(p: int) -> Tuple[PRegularClass, ...]:
    """Conjugacy classes of p-regular elements of GL2(F_p).

    Counts: p-1 central, (p-1)(p-2)/2 split, p(p-1)/2 non-split, for a
    total of p(p-1), the number of irreducible Brauer characters.
    """
    if not is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    out: List[PRegularClass] = [CentralClass(p, x) for x in range(1, p)]
    out.extend(SplitClass(p, x, y) for x in range(1, p) for y in range(x + 1, p))
    n = p * p - 1
    seen = set()
    for j in range(1, n):
        if j % (p + 1) == 0:
            continue
        rep = min(j, (p * j) % n)
        seen.add(rep)
    out.extend(NonsplitClass(p, j) for j in sorted(seen))
    assert len(out) == p * (p - 1)
    return tuple(out)


def class_exponents(c: PRegularClass) -> Tuple[int, int]:
    """Exponents (i, i') with Teichmuller-lifted eigenvalues zeta^i, zeta^i'."""
    p = c.p
    if isinstance(c, CentralClass):
        i = field_log(p, c.x)
        return i, i
    if isinstance(c, SplitClass):
        return field_log(p, c.x), field_log(p, c.y)
    return c.j, (p * c.j) % (p * p - 1)


def brauer_char_weight(w: SerreWeight, c: PRegularClass) -> CyclotomicElement:
    """Brauer character of V(a, b) at the class: (uv)^a * sum u^t v^(b-1-t)."""
    if w.p != c.p:
        raise ValueError("weight and class live at different primes")
    n = w.p * w.p - 1
    i, i2 = class_exponents(c)
    counts: Dict[int, int] = {}
    base = w.a * (i + i2)
    for t in range(w.b):
        e = (base + t * i + (w.b - 1 - t) * i2) % n
        counts[e] = counts.get(e, 0) + 1
    return _element_from_exponent_counts(n, counts)


def brauer_char_sym(p: int, N: int, c: PRegularClass) -> CyclotomicElement:
    """Brauer character of Sym^N at the class: sum_{t<=N} u^t v^(N-t)."""
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    if p != c.p:
        raise ValueError("prime and class disagree")
    n = p * p - 1
    i, i2 = class_exponents(c)
    counts: Dict[int, int] = {}
    for t in range(N + 1):
        e = (t * i + (N - t) * i2) % n
        counts[e] = counts.get(e, 0) + 1
    return _element_from_exponent_counts(n, counts)


# ---------------------------------------------------------------------------
# decomposition certification


@dataclass
class DecompositionReport:
    """Outcome of certifying decompose_sym(p, N) against Brauer characters."""

    p: int
    N: int
    classes_checked: int
    failures: List[Dict[str, object]]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_obj(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "N": self.N,
            "classes_checked": self.classes_checked,
            "failures": self.failures,
        }


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> Tuple[np.ndarray, int]:
    """x^j mod Phi_n for all j < n, as an (n, phi(n)) int64 matrix.

    Rows are built with exact Python integers before the int64 cast; the
    returned maximum absolute entry lets callers bound matvec results and
    guarantee the int64 path cannot overflow.
    """
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rows: List[List[int]] = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(list(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for idx in range(deg):
                cur[idx] -= top * phi[idx]
    tmax = max(abs(v) for row in rows for v in row)
    assert tmax < 2**32
    return np.array(rows, dtype=np.int64), tmax


def _class_exponent_matrix(p: int) -> np.ndarray:
    return np.array([class_exponents(c) for c in p_regular_classes(p)], dtype=np.int64)


def verify_decomposition(p: int, N: int) -> DecompositionReport:
    """Certify decompose_sym(p, N): for every p-regular class, the Brauer
    character of Sym^N must equal the multiplicity-weighted character sum
    of the claimed factors, exactly, in Z[x]/Phi_(p^2-1).

    Any failure is an implementation bug; linear independence of the
    irreducible Brauer characters makes this equivalent to equality in the
    Grothendieck group.
    """
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    classes = p_regular_classes(p)
    n = p * p - 1
    table, tmax = _reduction_table(n)
    exps = _class_exponent_matrix(p)
    i = exps[:, 0][:, None]
    i2 = exps[:, 1][:, None]
    rows = np.arange(len(classes))[:, None]

    counts = np.zeros((len(classes), n), dtype=np.int64)
    t = np.arange(N + 1, dtype=np.int64)[None, :]
    np.add.at(counts, (rows, (i * t + i2 * (N - t)) % n), 1)
    for w, mult in _decompose(p, N).items():
        tb = np.arange(w.b, dtype=np.int64)[None, :]
        cells = (w.a * (i + i2) + i * tb + i2 * (w.b - 1 - tb)) % n
        np.add.at(counts, (rows, cells), -mult)

    # total absolute mass per row is at most 2(N+1); rules out int64 overflow
    assert 2 * (N + 1) * tmax < 2**62
    residual = counts @ table
    bad = np.nonzero(np.any(residual != 0, axis=1))[0]
    failures = []
    for idx in bad:
        c = classes[int(idx)]
        failures.append(
            {
                "class": repr(c),
                "residual": [int(v) for v in residual[int(idx)]],
            }
        )
    return DecompositionReport(p, N, len(classes), failures)


def k_min_search(p: int, w: SerreWeight) -> int:
    """Least k in [2, p^2] whose Sym^(k-2) contains w, by direct scan."""
    for k in range(2, p * p + 1):
        if jh_multiplicity(p, k, w) > 0:
            return k
    raise InternalInvariantError(f"no k <= p^2 contains {w}")
