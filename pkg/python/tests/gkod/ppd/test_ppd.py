import pytest
import sympy

from gkod.errors import DomainError
from gkod.ppd import (
    mult_order_of_2,
    partition_law_holds,
    pi_of_mersenne,
    ppd_partition,
    ppd_set,
)


class TestMultOrder:
    @pytest.mark.parametrize(
        "p, expected", [(3, 2), (7, 3), (23, 11), (73, 9), (127, 7)]
    )
    def test_examples(self, p, expected):
        assert mult_order_of_2(p) == expected

    @pytest.mark.parametrize("p", [2, 9, 1])
    def test_domain(self, p):
        with pytest.raises(DomainError):
            mult_order_of_2(p)

    def test_agrees_with_sympy(self):
        for p in sympy.primerange(3, 3000):
            assert mult_order_of_2(p) == sympy.n_order(2, p), p


class TestPpdSet:
    @pytest.mark.parametrize(
        "k, expected",
        [(1, ()), (2, (3,)), (6, ()), (10, (11,)), (11, (23, 89)), (12, (13,))],
    )
    def test_examples(self, k, expected):
        assert ppd_set(k).primes == expected

    def test_str(self):
        assert str(ppd_set(6)) == "{}"
        assert str(ppd_set(11)) == "{23, 89}"

    def test_nonempty_outside_exceptions(self, cache):
        for k in range(2, 41):
            if k != 6:
                assert ppd_set(k, cache), k

    def test_members_have_order_k(self, cache):
        for k in range(2, 61):
            for p in ppd_set(k, cache):
                assert mult_order_of_2(p) == k

    def test_zero_is_rejected(self):
        with pytest.raises(DomainError):
            ppd_set(0)


class TestPartition:
    def test_pi_of_mersenne(self):
        assert pi_of_mersenne(10) == (3, 11, 31)

    def test_partition_of_12(self):
        parts = ppd_partition(12)
        assert sorted(parts) == [2, 3, 4, 6, 12]
        assert parts[4].primes == (5,)
        assert parts[6].primes == ()

    @pytest.mark.parametrize("k", range(2, 41))
    def test_law_holds(self, k, cache):
        assert partition_law_holds(k, cache)
