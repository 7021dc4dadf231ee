import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import WORKED, class_oracle, min_distance_oracle
from sslp.bitspace import BitString, SearchParams, residue_classes, sign_vector, union_distance
from sslp.screens import (
    SeparatorCertificate,
    coprime_residues,
    distance_check,
    propose_separators,
    separator_family,
    shift_screen,
    verify_separator,
)

HOMOGENEOUS = SearchParams(4, 2, 5, (1, 1, 1, 1), (0, 2))


def screen_oracle(p: SearchParams) -> bool:
    bad = {v % p.m for wi in p.w for v in (wi, -wi)}
    return all((a - b) % p.m not in bad for a, b in itertools.permutations(p.S, 2))


class TestShiftScreen:
    def test_examples(self):
        assert shift_screen(SearchParams(4, 2, 4, (1, 1, 1, 1), (0, 2))).passed
        fail = shift_screen(SearchParams(4, 2, 4, (1, 1, 1, 1), (0, 1)))
        assert not fail
        assert fail.offender == (1, 1, 0)
        assert shift_screen(WORKED).passed

    @settings(max_examples=150)
    @given(st.integers(2, 6), st.integers(2, 12), st.integers(1, 4), st.data())
    def test_matches_oracle(self, n, m, K, data):
        w = data.draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n))
        rest = data.draw(st.lists(st.integers(0, m - 1), min_size=K - 1, max_size=K - 1))
        p = SearchParams(n, K, m, w, (0, *rest))
        result = shift_screen(p)
        assert result.passed == screen_oracle(p)
        if not result.passed:
            i, j, k = result.offender
            diff = (p.S[j] - p.S[k]) % m
            assert diff in {p.w[i - 1] % m, (-p.w[i - 1]) % m}

    @settings(max_examples=100)
    @given(st.integers(2, 6), st.integers(3, 12), st.data())
    def test_screen_implies_distance_two(self, n, m, data):
        """Soundness: a passing nondegenerate tuple never has a Hamming-1 pair."""
        w = data.draw(st.lists(st.integers(1, m - 1), min_size=n, max_size=n))
        s = data.draw(st.integers(1, m - 1))
        p = SearchParams(n, 2, m, w, (0, s))
        if shift_screen(p):
            assert union_distance(residue_classes(p)) >= 2


class TestDistanceCheck:
    def test_worked_example(self):
        r = distance_check(residue_classes(WORKED))
        assert r.passed and r.exactly_two and r.distance == 2

    def test_single_flip_fails(self):
        r = distance_check([[BitString.parse("000"), BitString.parse("001")]])
        assert not r
        assert r.distance == 1

    def test_even_parity_example_supports(self):
        supports = ["0000", "0110", "1001", "1111", "0011", "1100"]
        r = distance_check([[BitString.parse(x) for x in supports]])
        assert r.passed
        assert r.distance == min_distance_oracle(supports) == 2


class TestSeparators:
    def test_homogeneous_certificate(self):
        classes = residue_classes(HOMOGENEOUS)
        assert [str(x) for x in classes[0]] == ["0000"]
        assert [str(x) for x in classes[1]] == class_oracle(4, (1, 1, 1, 1), 5, 2)
        cert = SeparatorCertificate((1, 1, 1, 1), Fraction(2), 1, 0)
        assert verify_separator(cert, classes)
        high = [sum(sign_vector(x)) for x in classes[0]]
        low = [sum(sign_vector(x)) for x in classes[1]]
        assert max(low) == 0 and min(high) == 4

    def test_class_against_itself_fails(self):
        classes = residue_classes(HOMOGENEOUS)
        for alpha in separator_family(4):
            for beta in range(-5, 6):
                assert not verify_separator(SeparatorCertificate(alpha, Fraction(beta), 1, 1), classes)

    def test_worked_example_has_no_separator(self):
        classes = residue_classes(WORKED)
        for alpha in separator_family(5, WORKED.w):
            for lo, hi in ((0, 1), (1, 0)):
                for twice_beta in range(-12, 13):
                    cert = SeparatorCertificate(alpha, Fraction(twice_beta, 2), lo, hi)
                    assert not verify_separator(cert, classes)
        assert propose_separators(classes, WORKED.w) == []

    def test_propose_finds_homogeneous(self):
        certs = propose_separators(residue_classes(HOMOGENEOUS))
        assert certs
        assert all(verify_separator(c, residue_classes(HOMOGENEOUS)) for c in certs)
        assert any(c.alpha == (1, 1, 1, 1) for c in certs)

    def test_identical_hulls_give_nothing(self):
        same = [BitString.parse(x) for x in ("0011", "1100", "0101")]
        assert propose_separators([same, list(same)]) == []

    def test_degenerate_inputs(self):
        assert propose_separators([[BitString.parse("00")]]) == []
        assert propose_separators([[BitString.parse("00")], []]) == []
        cert = SeparatorCertificate((1, 1), Fraction(0), 0, 1)
        assert not verify_separator(cert, [[BitString.parse("00")], []])
        with pytest.raises(IndexError):
            verify_separator(SeparatorCertificate((1, 1), Fraction(0), 0, 3), [[], []])
        wrong_len = SeparatorCertificate((1, 1, 1), Fraction(0), 0, 1)
        assert not verify_separator(wrong_len, [[BitString.parse("11")], [BitString.parse("00")]])

    def test_family_contents(self):
        fam = separator_family(3, (2, 2, 5))
        assert (1, 0, 0) in fam and (-1, 0, 0) in fam
        assert (1, 1, 1) in fam and (-1, -1, -1) in fam
        assert (1, 1, 0) in fam and (0, 0, 1) in fam
        assert len(fam) == len(set(fam))

    @settings(max_examples=60)
    @given(st.integers(2, 5), st.integers(3, 9), st.data())
    def test_certificates_always_verify(self, n, m, data):
        w = data.draw(st.lists(st.integers(1, m - 1), min_size=n, max_size=n))
        s = data.draw(st.integers(1, m - 1))
        classes = residue_classes(SearchParams(n, 2, m, w, (0, s)))
        for cert in propose_separators(classes, w):
            assert verify_separator(cert, classes)
            lo = max(sum(a * v for a, v in zip(cert.alpha, sign_vector(x))) for x in classes[cert.class_low])
            hi = min(sum(a * v for a, v in zip(cert.alpha, sign_vector(x))) for x in classes[cert.class_high])
            assert lo < cert.beta < hi


def test_coprime_residues():
    assert coprime_residues(WORKED)
    assert not coprime_residues(SearchParams(4, 2, 4, (1, 1, 1, 1), (0, 2)))
