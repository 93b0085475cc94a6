"""Counting n <= x by number of prime factors, restricted to kappa-free n.

Includes the repeated-prime index sequence p~(j) (each prime repeated
kappa-1 times), the minimal-index-sum representation Psi(n) of a kappa-free
integer with its largest index J(n), and empirical fitting of the constants
in the Hardy-Ramanujan-style upper bound for N_{kappa,ell}(x).

The constants in the bound are never asserted a priori: the fit reports the
minimal values that make the inequality hold on the scanned grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .factorizations import FactorisationTables
from .sieve import SieveTables, factorize, is_kappa_free, iterated_log


@dataclass(frozen=True)
class CountingProfile:
    """Counts per ell of {n <= x : n kappa-free, Omega(n) = ell}."""

    x: float
    kappa: int
    per_ell: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.per_ell.values())


def count_omega(x: float, ell: int, tables: SieveTables) -> int:
    """|{n <= x : omega(n) = ell}|, exact."""
    cutoff = _cutoff(x, tables)
    return int(np.count_nonzero(tables.small_omega[1 : cutoff + 1] == ell))


def count_bigomega(x: float, ell: int, tables: SieveTables) -> int:
    """|{n <= x : Omega(n) = ell}|, exact."""
    cutoff = _cutoff(x, tables)
    return int(np.count_nonzero(tables.big_omega[1 : cutoff + 1] == ell))


def N_kappa_ell(x: float, kappa: int, ell: int, tables: SieveTables) -> int:
    """|{n <= x : n kappa-free and Omega(n) = ell}|, exact."""
    if kappa < 2:
        raise ValueError(f"kappa must be >= 2, got {kappa}")
    cutoff = _cutoff(x, tables)
    mask = tables.kappa_free_mask(kappa)[1 : cutoff + 1]
    return int(np.count_nonzero(tables.big_omega[1 : cutoff + 1][mask] == ell))


def profile_N_kappa(x: float, kappa: int, tables: SieveTables) -> CountingProfile:
    """All N_{kappa,ell}(x) in one sieve pass."""
    if kappa < 2:
        raise ValueError(f"kappa must be >= 2, got {kappa}")
    cutoff = _cutoff(x, tables)
    mask = tables.kappa_free_mask(kappa)[1 : cutoff + 1]
    counts = np.bincount(tables.big_omega[1 : cutoff + 1][mask])
    return CountingProfile(
        x=x, kappa=kappa, per_ell={ell: int(c) for ell, c in enumerate(counts) if c}
    )


def _cutoff(x: float, tables: SieveTables) -> int:
    cutoff = int(math.floor(x))
    if cutoff > tables.limit:
        raise ValueError(f"x={x} beyond sieve limit {tables.limit}")
    if cutoff < 1:
        raise ValueError(f"x={x} must be >= 1")
    return cutoff


def tilde_p(j: int, kappa: int, tables: SieveTables) -> int:
    """j-th entry of the sequence of primes each repeated kappa-1 times."""
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    if kappa < 2:
        raise ValueError(f"kappa must be >= 2, got {kappa}")
    idx = -(-j // (kappa - 1))  # ceil(j / (kappa - 1))
    if idx > len(tables.primes):
        raise ValueError(f"prime index {idx} beyond sieve limit {tables.limit}")
    return int(tables.primes[idx - 1])


def psi_tuple(n: int, kappa: int, tables: SieveTables) -> tuple[tuple[int, ...], int]:
    """Minimal-index-sum increasing tuple (j_1 < ... < j_ell) with
    prod tilde_p(j_i) = n, together with J = j_ell.  n = 1 maps to ((), 0).

    Greedy: a prime p with p^e || n takes the e smallest indices of p's
    block of kappa-1 slots; validated against exhaustive search in tests.
    """
    if kappa < 2:
        raise ValueError(f"kappa must be >= 2, got {kappa}")
    if n == 1:
        return (), 0
    if not is_kappa_free(n, kappa, tables):
        raise ValueError(f"{n} is not {kappa}-free; no representation exists")
    k1 = kappa - 1
    indices: list[int] = []
    for p, e in factorize(n, tables).factors:
        r = tables.prime_index(p)  # block of p is {(r-1)k1 + 1, ..., r k1}
        start = (r - 1) * k1
        indices.extend(range(start + 1, start + e + 1))
    indices.sort()
    return tuple(indices), indices[-1]


@dataclass(frozen=True)
class CountingBoundReport:
    x: float
    kappa: int
    ell: int
    c1: float
    c2: float
    lhs: int
    rhs: float

    @property
    def ratio(self) -> float:
        return self.lhs / self.rhs if self.rhs else math.inf

    @property
    def passes(self) -> bool:
        return self.lhs <= self.rhs


def hr_free_rhs(x: float, kappa: int, ell: int, c1: float, c2: float) -> float:
    """C1 x/log x * ((kappa-1) log_2 x + (kappa-1) C2)^{ell-1} / (ell-1)!."""
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    k1 = kappa - 1
    base = k1 * iterated_log(x, 2) + k1 * c2
    return c1 * x / math.log(x) * base ** (ell - 1) / math.factorial(ell - 1)


def check_counting_bound(
    x: float, kappa: int, ell: int, c1: float, c2: float, tables: SieveTables
) -> CountingBoundReport:
    lhs = N_kappa_ell(x, kappa, ell, tables)
    rhs = hr_free_rhs(x, kappa, ell, c1, c2)
    return CountingBoundReport(x=x, kappa=kappa, ell=ell, c1=c1, c2=c2, lhs=lhs, rhs=rhs)


def prime_reciprocal_sum(x: float, tables: SieveTables) -> float:
    """sum over primes with p^2 < x of 1/(p log(x/p))."""
    if tables.limit * tables.limit < x:
        raise ValueError(f"sieve limit {tables.limit} too small for x={x}")
    total = 0.0
    for p in tables.primes:
        p = int(p)
        if p * p >= x:
            break
        total += 1.0 / (p * math.log(x / p))
    return total


def fit_prime_sum_constant(xs, tables: SieveTables, margin: float = 1e-9) -> float:
    """Minimal C2 with sum_{p^2<x} 1/(p log(x/p)) < (log_2 x + C2)/log x on xs."""
    needed = -math.inf
    for x in xs:
        s = prime_reciprocal_sum(x, tables)
        needed = max(needed, s * math.log(x) - iterated_log(x, 2))
    return needed + margin


def fit_counting_constants(
    xs, kappas, tables: SieveTables, *, c2: float | None = None
) -> tuple[float, float]:
    """Fit (C1, C2) empirically: C2 from the prime-sum inequality, then the
    minimal C1 making the N_{kappa,ell} bound hold over the whole grid."""
    if c2 is None:
        c2 = fit_prime_sum_constant(xs, tables)
    c1 = 0.0
    for x in xs:
        for kappa in kappas:
            profile = profile_N_kappa(x, kappa, tables)
            for ell, lhs in profile.per_ell.items():
                if ell < 1:
                    continue
                rhs_unit = hr_free_rhs(x, kappa, ell, 1.0, c2)
                c1 = max(c1, lhs / rhs_unit)
    # headroom so the binding grid point passes under float rounding
    return c1 * (1 + 1e-9), c2


def coffeeshop_sum(
    x: float,
    c,
    kappa: int,
    ftables: FactorisationTables,
    tables: SieveTables,
):
    """sum_{n<=x} c^Omega(n) f(n) over kappa-free n; exact when c is an int."""
    cutoff = int(math.floor(x))
    if cutoff > ftables.limit or cutoff > tables.limit:
        raise ValueError(f"x={x} beyond table limits")
    mask = tables.kappa_free_mask(kappa)
    omega = tables.big_omega
    f = ftables.f
    total = 0
    for n in range(1, cutoff + 1):
        if mask[n]:
            total += c ** int(omega[n]) * f[n]
    return total


def growth_exponents(
    xs,
    c,
    kappa: int,
    ftables: FactorisationTables,
    tables: SieveTables,
) -> list[tuple[float, float]]:
    """(x, log S(x)/log x) for the restricted power-weighted sum S."""
    out = []
    for x in xs:
        s = coffeeshop_sum(x, c, kappa, ftables, tables)
        out.append((x, math.log(abs(s)) / math.log(x)))
    return out
