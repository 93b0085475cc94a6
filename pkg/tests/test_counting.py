import math
from itertools import combinations

import pytest

from factorbench import counting
from factorbench.counting import (
    N_kappa_ell,
    check_counting_bound,
    coffeeshop_sum,
    count_bigomega,
    count_omega,
    fit_counting_constants,
    fit_prime_sum_constant,
    growth_exponents,
    prime_reciprocal_sum,
    profile_N_kappa,
    psi_tuple,
    tilde_p,
)
from factorbench.sieve import iterated_log


def test_count_examples(sieve_small):
    assert count_bigomega(10, 2, sieve_small) == 4  # 4, 6, 9, 10
    assert count_omega(10, 1, sieve_small) == 7  # 2,3,4,5,7,8,9
    assert count_bigomega(10, 0, sieve_small) == 1  # just 1


def test_counts_match_bruteforce(sieve_small):
    big = sieve_small.big_omega
    small = sieve_small.small_omega
    for x in (50, 500):
        for ell in range(0, 8):
            assert count_bigomega(x, ell, sieve_small) == sum(
                1 for n in range(1, x + 1) if big[n] == ell
            )
            assert count_omega(x, ell, sieve_small) == sum(
                1 for n in range(1, x + 1) if small[n] == ell
            )


def test_N_kappa_ell_examples(sieve_small):
    assert N_kappa_ell(10, 2, 2, sieve_small) == 2  # 6, 10
    assert N_kappa_ell(10, 3, 2, sieve_small) == 4  # ell <= kappa case
    for ell in range(0, 6):
        assert N_kappa_ell(100, 2, ell, sieve_small) <= count_bigomega(100, ell, sieve_small)


def test_N_kappa_ell_equals_bigomega_when_ell_below_kappa(sieve_small):
    # Omega(n) < kappa forces every exponent below kappa, so the kappa-free
    # restriction is vacuous there (at ell = kappa it is not: p^kappa)
    for kappa in (2, 3, 5):
        for ell in range(1, kappa):
            for x in (100, 5000):
                assert N_kappa_ell(x, kappa, ell, sieve_small) == count_bigomega(
                    x, ell, sieve_small
                )


@pytest.mark.parametrize("kappa", [2, 3, 5])
def test_profile_totals_kappa_free_count(sieve_big, kappa):
    x = 100_000
    profile = profile_N_kappa(x, kappa, sieve_big)
    mask = sieve_big.kappa_free_mask(kappa)
    assert profile.total == int(mask[1 : x + 1].sum())


def test_tilde_p_examples(sieve_small):
    assert tilde_p(5, 2, sieve_small) == 11  # kappa_1 = 1: j-th prime
    assert tilde_p(4, 5, sieve_small) == 2
    assert tilde_p(5, 5, sieve_small) == 3
    assert tilde_p(9, 5, sieve_small) == 5


def test_psi_examples(sieve_small):
    assert psi_tuple(4400, 5, sieve_small) == ((1, 2, 3, 4, 9, 10, 17), 17)
    assert psi_tuple(2, 2, sieve_small) == ((1,), 1)
    assert psi_tuple(1, 3, sieve_small) == ((), 0)
    # 12 = 2*2*3 with kappa=3: blocks {1,2} -> 2 and {3,4} -> 3
    assert psi_tuple(12, 3, sieve_small) == ((1, 2, 3), 3)


def test_psi_rejects_non_kappa_free(sieve_small):
    with pytest.raises(ValueError):
        psi_tuple(8, 3, sieve_small)


def exhaustive_min_sum_tuple(n, kappa, tables):
    """All increasing tuples over tilde-p with the given product, by search."""
    from factorbench.sieve import factorize

    ell = factorize(n, tables).big_omega
    k1 = kappa - 1
    # indices that can possibly participate: primes dividing n only
    candidates = []
    for p, e in factorize(n, tables).factors:
        r = tables.prime_index(p)
        block = range((r - 1) * k1 + 1, r * k1 + 1)
        candidates.extend(block)
    best = None
    count = 0
    for tup in combinations(sorted(candidates), ell):
        prod = 1
        for j in tup:
            prod *= tilde_p(j, kappa, tables)
        if prod == n:
            count += 1
            if best is None or sum(tup) < sum(best):
                best = tup
    return best, count


@pytest.mark.parametrize("kappa", [2, 3, 5])
def test_psi_minimal_and_reconstructs(sieve_small, kappa):
    mask = sieve_small.kappa_free_mask(kappa)
    for n in range(2, 2001):
        if not mask[n]:
            continue
        tup, j = psi_tuple(n, kappa, sieve_small)
        prod = 1
        for i in tup:
            prod *= tilde_p(i, kappa, sieve_small)
        assert prod == n
        assert list(tup) == sorted(tup) and len(set(tup)) == len(tup)
        assert j == tup[-1]
        if n <= 300:  # exhaustive search is combinatorial
            best, _count = exhaustive_min_sum_tuple(n, kappa, sieve_small)
            assert best == tup


def test_counting_bound_scales_with_c1(sieve_small):
    a = check_counting_bound(1000, 2, 2, 1.0, 1.0, sieve_small)
    b = check_counting_bound(1000, 2, 2, 2.0, 1.0, sieve_small)
    assert b.ratio == pytest.approx(a.ratio / 2)


def test_counting_bound_ell1_is_prime_count(sieve_small):
    # N_{kappa,1}(x) counts exactly the primes up to x
    x = 1000
    report = check_counting_bound(x, 2, 1, 1.3, 1.0, sieve_small)
    assert report.lhs == sum(1 for p in sieve_small.primes if p <= x)
    assert report.passes  # C1 = 1.3 suffices at ell = 1


def test_fitted_constants_make_bound_hold(sieve_big):
    xs = [10**2, 10**3, 10**4, 10**5, 10**6]
    kappas = (2, 3)
    c1, c2 = fit_counting_constants(xs, kappas, sieve_big)
    print(f"fitted counting constants C1 = {c1:.6f}, C2 = {c2:.6f}")
    for x in xs:
        for kappa in kappas:
            for ell in profile_N_kappa(x, kappa, sieve_big).per_ell:
                if ell >= 1:
                    assert check_counting_bound(x, kappa, ell, c1, c2, sieve_big).passes


def test_prime_sum_fact_up_to_1e8(sieve_big):
    xs = [10**2, 10**3, 10**4, 10**5, 10**6, 10**7, 10**8]
    c2 = fit_prime_sum_constant(xs, sieve_big)
    print(f"fitted prime-sum constant C2 = {c2:.6f}")
    for x in xs:
        lhs = prime_reciprocal_sum(x, sieve_big)
        rhs = (iterated_log(x, 2) + c2) / math.log(x)
        assert lhs < rhs


def test_coffeeshop_hand_example(ftables_small, sieve_small):
    # squarefree n <= 10: f(1)+f(2)+f(3)+f(5)+f(6)+f(7)+f(10) = 11
    assert coffeeshop_sum(10, 1, 2, ftables_small, sieve_small) == 11


def test_coffeeshop_unrestricted_for_large_kappa(ftables_small, sieve_small):
    x = 50
    unrestricted = sum(ftables_small.f[n] for n in range(1, x + 1))
    assert coffeeshop_sum(x, 1, 7, ftables_small, sieve_small) == unrestricted


def test_coffeeshop_exact_integer(ftables_small, sieve_small):
    total = coffeeshop_sum(100, 2, 2, ftables_small, sieve_small)
    assert isinstance(total, int)
    brute = sum(
        2 ** int(sieve_small.big_omega[n]) * ftables_small.f[n]
        for n in range(1, 101)
        if sieve_small.mu[n] != 0
    )
    assert total == brute


def test_growth_exponents_trend(ftables_big, sieve_big):
    rows = growth_exponents([10**3, 10**4, 10**5, 10**6], 2, 2, ftables_big, sieve_big)
    exps = [e for _, e in rows]
    print(f"C=2 kappa=2 exponents: {exps}")
    assert exps == sorted(exps, reverse=True)


def test_counting_profile_type(sieve_small):
    profile = profile_N_kappa(100, 2, sieve_small)
    assert profile.per_ell[1] == N_kappa_ell(100, 2, 1, sieve_small)
    assert all(c > 0 for c in profile.per_ell.values())
