"""Tests for the simple-group order database and its constants file."""

import random

import pytest

from gkod.arith import Factorization
from gkod.errors import ConstantsParseError, DomainError, IntegrityError
from gkod.orders import (
    GroupId,
    alternating_order,
    canonical,
    db_enumerate_dividing,
    default_constants,
    load_constants,
    order_Ln2,
    parse_constants,
    smallest_absent_prime,
)
from gkod.orders.constants import CHECKSUM_PATH, CONSTANTS_PATH


class TestEnumerateDividing:
    def test_order_sixty(self):
        entries = db_enumerate_dividing(Factorization.parse("2^2·3·5"))
        assert [e.name for e in entries] == ["Alt_5"]

    def test_below_smallest_simple_order(self):
        assert db_enumerate_dividing(Factorization.parse("2·3·7")) == []

    def test_required_primes_single_out_L10(self, cache):
        entries = db_enumerate_dividing(order_Ln2(10, cache), {11, 73}, cache)
        assert [e.name for e in entries] == ["L_10(2)"]

    def test_divisors_of_L5(self, cache):
        target = order_Ln2(5, cache)
        names = [e.name for e in db_enumerate_dividing(target, (), cache)]
        for name in ("Alt_5", "L_2(7)", "Alt_6", "L_3(4)", "L_5(2)"):
            assert name in names
        assert len(names) == len(set(names))

    def test_required_prime_filters(self, cache):
        target = order_Ln2(5, cache)
        entries = db_enumerate_dividing(target, {31}, cache)
        names = [e.name for e in entries]
        assert "L_2(31)" in names and "L_5(2)" in names
        assert all(31 in e.order.primes() for e in entries)

    def test_sorted_by_order(self, cache):
        entries = db_enumerate_dividing(order_Ln2(6, cache), (), cache)
        values = [e.order.value() for e in entries]
        assert values == sorted(values)
        assert all(e.order.divides(order_Ln2(6, cache)) for e in entries)

    def test_smallest_absent_prime(self):
        assert smallest_absent_prime(Factorization.parse("2^3·3·7")) == 5


class TestNothingIsMissed:
    """Groups outside the enumeration must not divide the target."""

    SEED = 2013
    DRAWS = 20

    @pytest.fixture(scope="class")
    def enumerated(self, cache):
        target = order_Ln2(10, cache)
        ids = {e.id for e in db_enumerate_dividing(target, (), cache)}
        return target, ids

    def _random_lie_groups(self, rng):
        families = default_constants().families()
        while True:
            fam = rng.choice(families)
            s, f = rng.choice((2, 3, 5, 7, 11, 13)), rng.randint(1, 3)
            if not fam.allows_field(s, f):
                continue
            rank = fam.fixed_rank or rng.randint(
                fam.min_rank, fam.min_rank + 3
            )
            try:
                gid = canonical(GroupId(fam.family, rank=rank, q=s**f))
            except DomainError:
                continue
            yield fam, rank, s**f, gid

    def test_random_lie_parameters(self, enumerated):
        target, ids = enumerated
        rng = random.Random(self.SEED)
        checked = 0
        for fam, rank, q, gid in self._random_lie_groups(rng):
            if gid in ids:
                continue
            assert target.value() % fam.order_value(rank, q) != 0, gid
            checked += 1
            if checked == self.DRAWS:
                break

    def test_random_alternating_degrees(self, enumerated):
        target, ids = enumerated
        rng = random.Random(self.SEED)
        degrees = [
            m for m in range(5, 60) if GroupId.alternating(m) not in ids
        ]
        for m in rng.sample(degrees, self.DRAWS):
            assert not alternating_order(m).divides(target), m


class TestConstants:
    def test_digest_matches_checksum_file(self):
        expected = CHECKSUM_PATH.read_text(encoding="ascii").split()[0]
        assert default_constants().digest == expected

    def test_families_and_sporadics(self):
        constants = default_constants()
        assert len(constants.sporadic) == 26
        assert len(constants.lie) == 16

    def test_tampered_file_is_rejected(self, tmp_path):
        copy = tmp_path / "groups.txt"
        copy.write_text(
            CONSTANTS_PATH.read_text(encoding="ascii") + "# edited\n",
            encoding="ascii",
        )
        with pytest.raises(IntegrityError):
            load_constants(copy, CHECKSUM_PATH)

    def test_unchecked_load(self, tmp_path):
        copy = tmp_path / "groups.txt"
        copy.write_text(
            CONSTANTS_PATH.read_text(encoding="ascii"), encoding="ascii"
        )
        assert load_constants(copy, None).digest == ""

    def test_missing_assignment_operator(self):
        with pytest.raises(ConstantsParseError) as info:
            parse_constants("A rank>=1 N = 1\n")
        assert info.value.line_number == 1

    def test_missing_tits_entry(self):
        with pytest.raises(ConstantsParseError):
            parse_constants("sporadic M_11 := 2^4*3^2*5*11\n")

    def test_unknown_parameter(self):
        text = "A size>=1 := N = 1; d = 1; body = q\ntits T := 2\n"
        with pytest.raises(ConstantsParseError):
            parse_constants(text)
