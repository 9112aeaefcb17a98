"""Tests for OD signatures, shape predicates and the candidate filter."""

import json

import pytest
from ruamel.yaml import YAML

from gkod.arith import Factorization
from gkod.errors import DomainError
from gkod.gkgraph import DegreePattern
from gkod.odpipe import (
    REPORT_KEYS,
    OdSignature,
    default_required_primes,
    frobenius_shape,
    lemma_m_closed_form,
    lemma_m_squarefree_ks,
    nonsolvable_by_degrees,
    od_filter,
    report_to_dict,
    report_to_json,
    report_to_text,
    report_to_yaml,
    signature_Ln2,
    two_frobenius_shape,
)
from gkod.orders import GroupId
from gkod.reference import load_lemma_m


@pytest.fixture(scope="module")
def report10():
    return od_filter(signature_Ln2(10), target=GroupId.linear(10, 2))


class TestSignature:
    def test_L10(self):
        sig = signature_Ln2(10)
        assert sig.primes == (2, 3, 5, 7, 11, 17, 31, 73, 127)
        assert sig.pattern.degrees == (6, 7, 5, 6, 2, 3, 5, 1, 3)
        assert sig.pattern.vertices == sig.primes

    def test_pattern_without_vertices_is_attached(self):
        sig = OdSignature(
            Factorization.parse("2^2·3·5"), DegreePattern.of(0, 0, 0)
        )
        assert sig.pattern.vertices == (2, 3, 5)

    def test_length_mismatch(self):
        with pytest.raises(DomainError):
            OdSignature(
                Factorization.parse("2^2·3·5"), DegreePattern.of(0, 0)
            )

    def test_default_required_primes(self):
        assert default_required_primes(signature_Ln2(10)) == (11, 73)
        assert default_required_primes(signature_Ln2(11)) == (23, 89)


class TestLemmaM:
    @pytest.mark.parametrize("n", range(3, 12))
    def test_printed_lists(self, n, cache):
        assert lemma_m_squarefree_ks(n, cache) == load_lemma_m()[n]

    def test_examples(self):
        assert lemma_m_squarefree_ks(10) == (7, 8, 9, 10)
        assert lemma_m_squarefree_ks(9) == (5, 7, 8, 9)

    @pytest.mark.parametrize("n", range(12, 41))
    def test_closed_form(self, n, cache):
        assert lemma_m_squarefree_ks(n, cache) == lemma_m_closed_form(n)

    def test_no_closed_form_below_twelve(self):
        with pytest.raises(DomainError):
            lemma_m_closed_form(11)


class TestShapes:
    def test_frobenius(self):
        assert frobenius_shape([3, 3, 0, 3, 3])
        assert not frobenius_shape([3, 3, 1, 3, 3])
        assert not frobenius_shape([0])

    def test_two_frobenius(self):
        assert two_frobenius_shape([1, 2, 1, 2, 2])
        assert not two_frobenius_shape([1, 2, 2, 2, 2])

    def test_both_hold_for_one_one_zero(self):
        assert frobenius_shape([1, 1, 0])
        assert two_frobenius_shape([1, 1, 0])

    def test_frobenius_implies_two_frobenius(self):
        for n in range(2, 12):
            d = [n - 2] * (n - 1) + [0]
            assert frobenius_shape(d)
            assert two_frobenius_shape(d)

    def test_nonsolvable_by_degrees(self):
        assert nonsolvable_by_degrees([2, 3, 1, 2, 0])
        assert not nonsolvable_by_degrees([6, 7, 5, 6, 2, 3, 5, 1, 3])
        assert not nonsolvable_by_degrees([0, 4, 4, 4, 4])

    def test_nonsolvable_needs_three_vertices(self):
        with pytest.raises(DomainError):
            nonsolvable_by_degrees([0, 0])


class TestOdFilter:
    def test_L10_is_resolved(self, report10):
        assert report10.unique
        assert [c.name for c in report10.candidates] == ["L_10(2)"]
        assert report10.required_primes == (11, 73)
        assert (
            report10.verdict == "candidate filter uniquely resolves to L_10(2)"
        )

    def test_L10_checks(self, report10):
        assert report10.check("caro-wei").passed
        assert "349/168" in report10.check("caro-wei").detail
        assert report10.check("t2-lower-bound").passed
        assert report10.check("not-frobenius").passed
        assert report10.check("not-2-frobenius").passed
        assert report10.check("candidate-order-divides").passed
        informational = report10.check("nonsolvable-by-degrees")
        assert informational.informational
        assert not informational.passed

    def test_unknown_check(self, report10):
        with pytest.raises(KeyError):
            report10.check("no-such-check")

    def test_L11_is_resolved(self, cache):
        report = od_filter(signature_Ln2(11, cache), [23, 89], cache=cache)
        assert report.unique
        assert report.target == GroupId.linear(11, 2)

    def test_alternating_five(self):
        sig = OdSignature(
            Factorization.parse("2^2·3·5"), DegreePattern.of(0, 0, 0)
        )
        report = od_filter(sig)
        assert report.unique
        assert report.target == GroupId.alternating(5)
        assert report.verdict.endswith("Alt_5")

    def test_several_candidates(self, cache):
        report = od_filter(signature_Ln2(5, cache), [5, 31], cache=cache)
        names = [c.name for c in report.candidates]
        assert names == ["L_2(31)", "L_5(2)"]
        assert not report.unique
        assert report.target is None
        assert report.verdict.startswith("2 candidates remain")

    def test_required_prime_must_divide_the_order(self):
        with pytest.raises(DomainError):
            od_filter(signature_Ln2(10), [23])

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "n, required",
        [(5, {31}), (6, {31}), (7, {127}), (8, {127}), (9, {17, 73})],
    )
    def test_small_n_keep_the_target(self, n, required, cache):
        sig = signature_Ln2(n, cache)
        report = od_filter(sig, required, cache=cache)
        matches = [c for c in report.candidates if c.order == sig.order]
        assert [c.name for c in matches] == [f"L_{n}(2)"]


class TestReport:
    def test_key_order(self, report10):
        assert tuple(report_to_dict(report10)) == REPORT_KEYS

    def test_json(self, report10):
        data = json.loads(report_to_json(report10))
        assert data == report_to_dict(report10)
        assert data["pattern"]["73"] == 1

    def test_yaml(self, report10):
        data = YAML(typ="safe").load(report_to_yaml(report10))
        assert data == report_to_dict(report10)

    def test_text(self, report10):
        lines = report_to_text(report10).splitlines()
        assert lines[0] == "target: L_10(2)"
        assert "required primes: {11, 73}" in lines
        assert any("[INFO no] nonsolvable-by-degrees" in x for x in lines)
        assert lines[-1] == (
            "verdict: candidate filter uniquely resolves to L_10(2)"
        )
