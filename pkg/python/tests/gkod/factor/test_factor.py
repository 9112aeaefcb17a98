"""Tests for primality, factorization and Lucas-Lehmer."""

import random

import pytest
import sympy

from gkod.arith import Factorization
from gkod.errors import DomainError, IncompleteFactorizationError
from gkod.factor import (
    cyclotomic_value,
    factor,
    factor_mersenne,
    is_prime,
    lucas_lehmer,
    mersenne_exponents,
    mersenne_sweep,
    verify_factorization,
)


class TestIsPrime:
    @pytest.mark.parametrize(
        "n, expected", [(127, True), (2047, False), (1, False), (0, False)]
    )
    def test_examples(self, n, expected):
        assert is_prime(n) is expected

    def test_agrees_with_sympy_below_a_million(self):
        rng = random.Random(3)
        for n in [2, 3, 4, 561, 1105, 7919, 999983] + [
            rng.randint(1, 10**6) for _ in range(2000)
        ]:
            assert is_prime(n) == sympy.isprime(n), n

    def test_strong_pseudoprimes_to_small_bases(self):
        # 3215031751 is a strong pseudoprime to bases 2, 3, 5 and 7.
        assert not is_prime(3215031751)
        assert not is_prime(3825123056546413051)

    def test_above_two_to_the_64(self):
        assert is_prime(2**127 - 1)
        assert is_prime(2**89 - 1)
        assert not is_prime((2**61 - 1) * (2**31 - 1) * (2**7 - 1))

    def test_deterministic(self):
        n = 2**107 - 1
        assert all(is_prime(n) for _ in range(3))


class TestFactor:
    @pytest.mark.parametrize(
        "n, expected",
        [
            (2047, "23·89"),
            (63, "3^2·7"),
            (2**29 - 1, "233·1103·2089"),
            (1, "1"),
        ],
    )
    def test_examples(self, n, expected):
        assert factor(n) == Factorization.parse(expected)

    def test_agrees_with_sympy(self):
        rng = random.Random(5)
        for n in [rng.randint(2, 10**6) for _ in range(500)]:
            assert factor(n).as_dict() == sympy.factorint(n), n

    def test_rho_beyond_trial_division(self):
        n = 1000003 * 1000033
        assert factor(n) == Factorization.parse("1000003·1000033")

    def test_zero_is_rejected(self):
        with pytest.raises(DomainError):
            factor(0)

    def test_exhausted_budget_names_the_composite(self):
        n = 1000003 * 1000033
        with pytest.raises(IncompleteFactorizationError) as info:
            factor(n, budget=1)
        assert info.value.composite == n
        assert str(n) in str(info.value)


class TestFactorMersenne:
    def test_cyclotomic_values(self):
        assert cyclotomic_value(6) == 3
        assert cyclotomic_value(12) == 13
        assert cyclotomic_value(7) == 127

    @pytest.mark.parametrize("k", range(1, 31))
    def test_reconstructs_small_k(self, k):
        f = factor_mersenne(k)
        verify_factorization(f, 2**k - 1)

    @pytest.mark.slow
    def test_reconstructs_without_cache_up_to_72(self):
        for k in range(1, 73):
            f = factor_mersenne(k)
            assert f.value() == 2**k - 1
            assert all(sympy.isprime(p) for p in f.primes())

    def test_cache_hit(self, cache):
        assert factor_mersenne(127, cache) == Factorization(((2**127 - 1, 1),))

    def test_cache_covers_every_k_up_to_127(self, cache):
        assert list(cache) == list(range(2, 128))

    def test_generic_factor_routes_mersenne_numbers(self, cache):
        assert factor(2**11 - 1, cache) == Factorization.parse("23·89")


class TestLucasLehmer:
    @pytest.mark.parametrize(
        "p, expected", [(13, True), (11, False), (61, True), (3, True)]
    )
    def test_examples(self, p, expected):
        assert lucas_lehmer(p) is expected

    @pytest.mark.parametrize("p", [2, 9, 1])
    def test_domain(self, p):
        with pytest.raises(DomainError):
            lucas_lehmer(p)

    def test_agrees_with_is_prime_up_to_127(self):
        for p in range(3, 128):
            if sympy.isprime(p):
                assert lucas_lehmer(p) == is_prime(2**p - 1), p

    def test_sweep_to_127(self):
        sweep = mersenne_sweep(127)
        assert sweep.found == (2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127)
        assert sweep.matches

    @pytest.mark.slow
    def test_sweep_to_2281(self):
        sweep = mersenne_sweep(2281)
        assert sweep.matches
        assert sweep.found[-5:] == (521, 607, 1279, 2203, 2281)

    def test_small_max_p(self):
        assert mersenne_exponents(1) == ()
        assert mersenne_exponents(2) == (2,)
