"""The one-parameter family built from F_z (1 at n=1, -z elsewhere).

F_z's Dirichlet inverse satisfies Ft_z(n) = sum_k z^k f_k(n) for n >= 2; the
squarefree-restricted inverse G_z is the coefficient sequence of the
reciprocal series, multiplicative only at z = 0 and z = -1.  Integer z is
kept in exact integer arithmetic throughout (the alternating sums cancel
catastrophically in doubles for |z| > 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from scipy.optimize import brentq

from . import zeta as zeta_mod
from .dirichlet import ArithFn, dirichlet_inverse, restrict_support
from .factorizations import FactorisationTables
from .sieve import SieveTables


@dataclass
class ZFamilyContext:
    """Cached truncations of F_z, its inverse, and G_z, plus the abscissa
    beta_z where the reciprocal series stops converging."""

    z: complex
    limit: int
    fz: ArithFn
    fz_tilde: ArithFn
    gz: ArithFn
    beta_z: float  # -inf marker at z = 0


def _as_scalar(z):
    """Keep exact types: int stays int, real complex collapses to float/int."""
    if isinstance(z, complex) and z.imag == 0:
        z = z.real
    if isinstance(z, float) and z.is_integer():
        z = int(z)
    return z


def build_context(z, limit: int, tables: SieveTables) -> ZFamilyContext:
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if limit > tables.limit:
        raise ValueError(f"limit {limit} beyond sieve limit {tables.limit}")
    z = _as_scalar(z)
    fz = ArithFn(limit, [0, 1] + [-z] * (limit - 1))
    fz_tilde = dirichlet_inverse(fz)
    mu = tables.mu
    restricted = restrict_support(fz_tilde, lambda n: mu[n] != 0)
    gz = dirichlet_inverse(restricted)
    return ZFamilyContext(
        z=z, limit=limit, fz=fz, fz_tilde=fz_tilde, gz=gz, beta_z=beta_for_z(z)
    )


def beta_for_z(z) -> float:
    """Root of zeta(beta) = 1 + 1/|z| on (1, inf); -inf marker at z = 0."""
    az = abs(z)
    if az == 0:
        return -math.inf
    target = 1.0 + 1.0 / az
    lo = zeta_mod.SIGMA_FLOOR + 1e-9
    if zeta_mod.zeta_real(lo).value <= target:
        raise ValueError(f"|z|={az} too small: root lies below sigma={lo}")
    hi = 2.0
    while zeta_mod.zeta_real(hi).value > target:
        hi *= 2
    return float(brentq(lambda s: zeta_mod.zeta_real(s).value - target, lo, hi, xtol=1e-13))


def inverse_at_prime_power(
    z, alpha: int, n: int, p: int, ftables: FactorisationTables
):
    """Closed form for the inverse of F_z at p^alpha * n, p not dividing n:

        (z+1)^(alpha-1) * sum_{ell>=1} z^ell (z + ell/alpha (z+1))
                          * C(alpha+ell-1, ell) * f_ell(n)

    For n = 1 the sum collapses, so the value comes from the power-series
    route sum_k z^k f_k(p^alpha) with f_k(p^alpha) = C(alpha-1, k-1).
    Exact (integer/rational arithmetic) when z is an exact integer.
    """
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    if n % p == 0:
        raise ValueError(f"p={p} divides n={n}")
    z = _as_scalar(z)
    exact = isinstance(z, int)
    if n == 1:
        total = sum(
            (Fraction(z) if exact else z) ** k * math.comb(alpha - 1, k - 1)
            for k in range(1, alpha + 1)
        )
        return _finish(total, exact)
    if n > ftables.limit or ftables.k_max < n.bit_length() - 1:
        raise ValueError(f"f_k tables do not cover n={n}")
    zz = Fraction(z) if exact else z
    total = 0
    for ell in range(1, len(ftables.fk)):
        fl = ftables.fk[ell][n]
        if fl == 0:
            continue
        weight = zz + Fraction(ell, alpha) * (zz + 1) if exact else zz + (ell / alpha) * (zz + 1)
        total += zz**ell * weight * math.comb(alpha + ell - 1, ell) * fl
    total *= (zz + 1) ** (alpha - 1)
    return _finish(total, exact)


def _finish(value, exact: bool):
    if exact:
        frac = Fraction(value)
        if frac.denominator != 1:
            raise AssertionError(f"closed form produced non-integer {frac}")
        return int(frac)
    return value


def B_sum(z, alpha: int, ell: int):
    """Defining k-sum: sum_{k=0}^{alpha} z^k C(k+ell, ell) C(alpha+ell-1, k+ell-1)."""
    if alpha < 1 or ell < 1:
        raise ValueError("alpha and ell must be >= 1")
    return sum(
        z**k * math.comb(k + ell, ell) * math.comb(alpha + ell - 1, k + ell - 1)
        for k in range(alpha + 1)
    )


def B_closed(z, alpha: int, ell: int):
    """C(alpha+ell-1, ell) * (z (z+1)^(alpha-1) + ell/alpha (z+1)^alpha)."""
    if alpha < 1 or ell < 1:
        raise ValueError("alpha and ell must be >= 1")
    z = _as_scalar(z)
    if isinstance(z, int):
        zz = Fraction(z)
        val = math.comb(alpha + ell - 1, ell) * (
            zz * (zz + 1) ** (alpha - 1) + Fraction(ell, alpha) * (zz + 1) ** alpha
        )
        return _finish(val, True)
    return math.comb(alpha + ell - 1, ell) * (
        z * (z + 1) ** (alpha - 1) + (ell / alpha) * (z + 1) ** alpha
    )


def binomial_identity_check(alpha: int, k: int, ell: int) -> bool:
    """C(k+ell,ell) C(alpha+ell-1,k+ell-1)
    == C(alpha+ell-1,ell) (C(alpha-1,k-1) + ell/alpha C(alpha,k)), exactly."""
    if not 0 <= k <= alpha:
        raise ValueError(f"need 0 <= k <= alpha, got k={k}, alpha={alpha}")
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    lhs = Fraction(math.comb(k + ell, ell) * math.comb(alpha + ell - 1, k + ell - 1))
    low = math.comb(alpha - 1, k - 1) if k >= 1 else 0
    rhs = math.comb(alpha + ell - 1, ell) * (
        Fraction(low) + Fraction(ell, alpha) * math.comb(alpha, k)
    )
    return lhs == rhs


def fk_prime_power_expansion(
    p: int, alpha: int, n: int, k: int, ftables: FactorisationTables
) -> int:
    """f_k(p^alpha n) via sum_{ell=max(1,k-alpha)}^{k} C(k,ell) C(alpha+ell-1,k-1) f_ell(n)."""
    if n % p == 0:
        raise ValueError(f"p={p} divides n={n}")
    if alpha < 1 or k < 1:
        raise ValueError("alpha and k must be >= 1")
    if n == 1:
        # only the all-p tuple lengths contribute: f_k(p^alpha) = C(alpha-1, k-1)
        return math.comb(alpha - 1, k - 1) if k <= alpha else 0
    total = 0
    for ell in range(max(1, k - alpha), k + 1):
        if ell >= len(ftables.fk):
            break
        total += math.comb(k, ell) * math.comb(alpha + ell - 1, k - 1) * ftables.fk[ell][n]
    return total


@dataclass(frozen=True)
class MultiplicativityWitness:
    z: complex
    g2: complex
    g3: complex
    g6: complex

    @property
    def discrepancy(self):
        """G(2) G(3) - G(6); nonzero exactly when z is not 0 or -1."""
        return self.g2 * self.g3 - self.g6


def non_multiplicativity_witness(ctx: ZFamilyContext) -> MultiplicativityWitness:
    if ctx.limit < 6:
        raise ValueError(f"context limit {ctx.limit} < 6")
    g = ctx.gz.values
    return MultiplicativityWitness(z=ctx.z, g2=g[2], g3=g[3], g6=g[6])
