import math

import pytest

from primefree import (Certificate, Pair, PowerFactor, certify_pair, residue_set,
                       verify_certificate)
from primefree.config import Config
from primefree.errors import DomainError
from primefree.families import (FamilyKind, fermat_instance, fermat_pair, q2plus1_pairs,
                                q6q3plus1_pairs, wilson_instances, wilson_params,
                                wilson_term_factor, wilson_terms)


@pytest.mark.parametrize("p, pair", [(11, (10, 11)), (3, (2, 3)), (7, (6, 7))])
def test_fermat_pair(p, pair):
    assert fermat_pair(p) == Pair(*pair)
    assert fermat_instance(p).kind is FamilyKind.FERMAT


@pytest.mark.parametrize("p", [2, 9, 1, 0, 91])
def test_fermat_pair_domain(p):
    with pytest.raises(DomainError):
        fermat_pair(p)


def _pairs(instances):
    return [(i.pair.t, i.pair.d) for i in instances]


def test_q2plus1_examples():
    assert _pairs(q2plus1_pairs(16)) == [(2, 5), (8, 17), (18, 37), (50, 101), (98, 197),
                                          (128, 257)]
    assert _pairs(q2plus1_pairs(2)) == [(2, 5)]
    assert [i.p for i in q2plus1_pairs(26)] == [5, 17, 37, 101, 197, 257, 401, 577, 677]
    assert all(i.p == i.q ** 2 + 1 for i in q2plus1_pairs(200))


def test_q6q3plus1_examples():
    assert _pairs(q6q3plus1_pairs(8)) == [(24, 73), (252, 757), (87552, 262657)]
    assert _pairs(q6q3plus1_pairs(2)) == [(24, 73)]
    assert [i.p for i in q6q3plus1_pairs(8)] == [73, 757, 262657]


def test_q6q3plus1_remainders_exhaustive():
    for inst in q6q3plus1_pairs(3):
        q = inst.q
        assert residue_set(inst.pair.t, inst.p) == {0, 1, q ** 3, q ** 6}


def test_q2plus1_remainders_exhaustive():
    for inst in q2plus1_pairs(16):
        assert residue_set(inst.pair.t, inst.p) == {0, 1, inst.q ** 2}


@pytest.mark.parametrize("t, d", [(2, 3), (4, 5), (6, 7), (10, 11), (12, 13), (18, 19),
                                  (22, 23), (28, 29), (30, 31), (36, 37), (40, 41),
                                  (2, 5), (8, 17), (18, 37), (50, 101), (98, 197),
                                  (128, 257), (24, 73), (252, 757)])
def test_family_pairs_certify_with_power_evidence(t, d):
    cert = certify_pair(Pair(t, d), Config(find_exceptions=t <= 60))
    assert isinstance(cert, Certificate)
    assert all(isinstance(e, PowerFactor) for e in cert.evidence)
    assert verify_certificate(cert).valid


@pytest.mark.slow
def test_largest_q6q3plus1_pair_certifies_without_exception_scan():
    cert = certify_pair(Pair(87552, 262657))
    assert isinstance(cert, Certificate)
    assert not cert.exceptions_complete
    assert all(isinstance(e, PowerFactor) for e in cert.evidence)
    assert {e.s for e in cert.evidence} == {0, 1, 8 ** 3, 8 ** 6}


def test_wilson_params():
    squares = {x * x % 5 for x in range(5)}
    oracle = [c for c in range(5) if (-c - 1) % 5 not in squares]
    assert wilson_params(5) == oracle == [1, 2]
    assert len(wilson_params(3)) == 1
    assert len(wilson_params(7)) == 3
    for p in (11, 13, 101):
        assert len(wilson_params(p)) == (p - 1) // 2
    with pytest.raises(DomainError):
        wilson_params(4)


def test_wilson_term_example():
    term = wilson_term_factor(5, 2, 1)
    assert (term.q_n, term.remainder, term.factor) == (14, 2, 2)
    assert math.factorial(4) * 3 // 5 == 14
    assert not term.degenerate


def test_wilson_remainder_never_one_over_all_classes():
    for p in (3, 5, 7, 11, 13, 17, 19):
        for c in wilson_params(p):
            for n in range(1, p + 1):
                assert math.factorial(p - 1) * (n * n + c) % p != 1
                wilson_term_factor(p, c, n)


def test_wilson_zero_remainder_uses_factorial_divisibility():
    # r = 0 exactly when n**2 + c = 0 mod p
    for p in (5, 7, 11, 13):
        for c in wilson_params(p):
            for n in range(1, 3 * p):
                term = wilson_term_factor(p, c, n)
                if term.remainder == 0:
                    assert term.q_n % math.factorial(p - 1) == 0 and term.factor == 2


def test_wilson_rejects_residue_offset():
    with pytest.raises(DomainError):
        wilson_term_factor(5, 0, 1)  # -1 = 4 is a square mod 5


def test_wilson_degenerate_prefix_flagged():
    term = wilson_term_factor(3, 0, 1)
    assert term.q_n == 0 and term.degenerate


def test_wilson_instances_and_terms():
    assert [i.c for i in wilson_instances(7)] == wilson_params(7)
    terms = list(wilson_terms(7, wilson_params(7)[0], 20))
    assert [t.n for t in terms] == list(range(1, 21))
