"""Truncated arithmetic-function algebra: convolution, inversion, and series sums.

Values are plain Python scalars (int or complex) in a list indexed 1..N, so
integer-valued inputs stay exact through convolution and inversion; mixed or
complex inputs fall back to complex doubles.  Instances are treated as
immutable: every operation returns a new ArithFn.
"""

from __future__ import annotations

import cmath
import csv
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from .sieve import SieveTables


@dataclass(frozen=True)
class ComplexPoint:
    """A point s = sigma + i t of the complex plane."""

    sigma: float
    t: float = 0.0

    def as_complex(self) -> complex:
        return complex(self.sigma, self.t)


@dataclass
class ArithFn:
    """A truncated arithmetic function: values[n] for 1 <= n <= limit.

    values[0] is an unused placeholder so indices match the mathematics.
    """

    limit: int
    values: list

    def __post_init__(self):
        if len(self.values) != self.limit + 1:
            raise ValueError(
                f"need {self.limit + 1} slots, got {len(self.values)}"
            )

    def __getitem__(self, n: int):
        return self.values[n]

    @classmethod
    def from_values(cls, values_1_to_n: Iterable) -> "ArithFn":
        vals = list(values_1_to_n)
        return cls(limit=len(vals), values=[0] + vals)

    @classmethod
    def ones(cls, limit: int) -> "ArithFn":
        return cls(limit=limit, values=[0] + [1] * limit)

    @classmethod
    def unit(cls, limit: int) -> "ArithFn":
        return cls(limit=limit, values=[0, 1] + [0] * (limit - 1))

    @classmethod
    def mobius(cls, limit: int, tables: SieveTables) -> "ArithFn":
        if limit > tables.limit:
            raise ValueError(f"limit {limit} beyond sieve limit {tables.limit}")
        return cls(limit=limit, values=[0] + [int(tables.mu[n]) for n in range(1, limit + 1)])

    @classmethod
    def completely_multiplicative(
        cls, limit: int, tables: SieveTables, prime_values: dict
    ) -> "ArithFn":
        """Extend values on primes to all of 1..limit via F(mn) = F(m)F(n)."""
        if limit > tables.limit:
            raise ValueError(f"limit {limit} beyond sieve limit {tables.limit}")
        vals = [0] * (limit + 1)
        vals[1] = 1
        for n in range(2, limit + 1):
            p = int(tables.spf[n])
            vals[n] = vals[n // p] * prime_values[p]
        return cls(limit=limit, values=vals)

    def scale(self, c) -> "ArithFn":
        return ArithFn(self.limit, [0] + [c * v for v in self.values[1:]])

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["n", "re", "im"])
            for n in range(1, self.limit + 1):
                v = complex(self.values[n])
                w.writerow([n, repr(v.real), repr(v.imag)])

    @classmethod
    def from_csv(cls, path) -> "ArithFn":
        rows = {}
        with open(path, newline="") as fh:
            for rec in csv.DictReader(fh):
                n = int(rec["n"])
                re, im = float(rec["re"]), float(rec["im"])
                rows[n] = complex(re, im) if im else (int(re) if re.is_integer() else re)
        limit = max(rows)
        if set(rows) != set(range(1, limit + 1)):
            raise ValueError("CSV must cover n = 1..N without gaps")
        return cls(limit=limit, values=[0] + [rows[n] for n in range(1, limit + 1)])


def convolve(F: ArithFn, G: ArithFn) -> ArithFn:
    """(F*G)(n) = sum over ab = n of F(a) G(b)."""
    if F.limit != G.limit:
        raise ValueError(f"limit mismatch: {F.limit} vs {G.limit}")
    N = F.limit
    out = [0] * (N + 1)
    fv, gv = F.values, G.values
    for a in range(1, N + 1):
        fa = fv[a]
        if fa == 0:
            continue
        for b in range(1, N // a + 1):
            out[a * b] += fa * gv[b]
    return ArithFn(limit=N, values=out)


def dirichlet_inverse(F: ArithFn) -> ArithFn:
    """The function Ft with F * Ft = I, by the forward-substitution sweep.

    O(N log N): once Ft(m) is final, its contributions F(d) Ft(m) are pushed
    to all dm <= N.  Exact when F is integer-valued with F(1) = +-1.
    """
    N = F.limit
    f1 = F.values[1]
    if f1 == 0:
        raise ValueError("F(1) = 0: Dirichlet inverse does not exist")
    exact_unit = f1 == 1 or f1 == -1
    inv1 = f1 if exact_unit else 1 / f1
    acc = [0] * (N + 1)
    out = [0] * (N + 1)
    out[1] = inv1
    fv = F.values
    for m in range(1, N + 1):
        if m > 1:
            out[m] = -inv1 * acc[m] if exact_unit else -acc[m] / f1
        fm = out[m]
        if fm == 0:
            continue
        for d in range(2, N // m + 1):
            acc[d * m] += fv[d] * fm
    return ArithFn(limit=N, values=out)


def f_k_F(F: ArithFn, n: int, k: int) -> complex:
    """Sum of F(n_1)...F(n_k) over ordered k-tuples of integers >= 2 with
    product n.  Zero for k > Omega(n).  Exponential-size object computed by
    memoized recursion over (first factor, rest); oracle scale only.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    memo: dict[tuple[int, int], complex] = {}

    def rec_full(m: int, j: int):
        if j == 1:
            return F.values[m] if m >= 2 else 0
        if m == 1:
            return 0
        key = (m, j)
        if key not in memo:
            total = 0
            for d in _divisors_ge2(m):
                total += F.values[d] * rec_full(m // d, j - 1)
            memo[key] = total
        return memo[key]

    if n > F.limit:
        raise ValueError(f"n={n} beyond truncation limit {F.limit}")
    return rec_full(n, k)


@lru_cache(maxsize=200_000)
def _divisors_ge2(n: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    if n >= 2:
        out.append(n)
    return tuple(sorted(out))


def inverse_via_alternating(F: ArithFn) -> ArithFn:
    """Inverse through the alternating sum I(n) + sum_k (-1)^k f_k(F; n).

    Independent of the forward-substitution sweep; cost grows quickly with
    Omega(n), so keep the limit around 10^3.  F is normalized to F(1) = 1
    internally and the normalization is undone on output.
    """
    N = F.limit
    f1 = F.values[1]
    if f1 == 0:
        raise ValueError("F(1) = 0: Dirichlet inverse does not exist")
    G = F if f1 == 1 else F.scale(1 / f1)
    gv = G.values
    memo: dict[tuple[int, int], complex] = {}

    def fk(m: int, j: int):
        if j == 1:
            return gv[m] if m >= 2 else 0
        if m == 1:
            return 0
        key = (m, j)
        if key not in memo:
            memo[key] = sum(gv[d] * fk(m // d, j - 1) for d in _divisors_ge2(m))
        return memo[key]

    out = [0] * (N + 1)
    out[1] = 1
    for n in range(2, N + 1):
        total = 0
        sign = -1
        for k in range(1, _big_omega(n) + 1):
            total += sign * fk(n, k)
            sign = -sign
        out[n] = total
    if f1 != 1:
        out = [0] + [v / f1 for v in out[1:]]
    return ArithFn(limit=N, values=out)


def _big_omega(n: int) -> int:
    count = 0
    d = 2
    while d * d <= n:
        while n % d == 0:
            n //= d
            count += 1
        d += 1
    return count + (1 if n > 1 else 0)


def restrict_support(F: ArithFn, predicate: Callable[[int], bool]) -> ArithFn:
    """Pointwise product with the indicator of the predicate."""
    return ArithFn(
        F.limit,
        [0] + [F.values[n] if predicate(n) else 0 for n in range(1, F.limit + 1)],
    )


def summatory(F: ArithFn, x: float):
    """Partial sum of F(n) over n <= x."""
    cutoff = min(int(math.floor(x)), F.limit)
    if math.floor(x) > F.limit:
        raise ValueError(f"x={x} beyond truncation limit {F.limit}")
    return sum(F.values[1 : cutoff + 1])


def series_eval(F: ArithFn, s) -> complex:
    """Truncated Dirichlet series sum F(n) n^{-s} with n^{-s} = exp(-s log n)."""
    if isinstance(s, ComplexPoint):
        s = s.as_complex()
    total = 0
    for n in range(1, F.limit + 1):
        v = F.values[n]
        if v:
            total += v * cmath.exp(-s * math.log(n))
    return total
