import dataclasses
import random

import pytest

from primefree import Certificate, Pair, certify_pair, verify_certificate
from primefree.arith import divisors, is_probable_prime
from primefree.certificate import PowerFactor, Uncovered, Witness, dumps, to_dict
from primefree.checker import verify_file
from primefree.errors import CertificateFormatError


def _replace_evidence(cert, i, new):
    ev = list(cert.evidence)
    ev[i] = new
    return dataclasses.replace(cert, evidence=tuple(ev))


def single_field_mutations(cert):
    """Yield (label, mutated certificate) for every single evidence-field change we try."""
    t = cert.pair.t
    for i, e in enumerate(cert.evidence):
        if isinstance(e, PowerFactor):
            for v in {e.base + 1, e.base - 1, e.base + 2} - {e.base}:
                if v >= 0:
                    yield f"r={e.r} base={v}", i, _replace_evidence(cert, i, dataclasses.replace(e, base=v))
            for v in {e.k + 1, e.k - 1, *divisors(t)} - {e.k}:
                if v >= 0:
                    yield f"r={e.r} k={v}", i, _replace_evidence(cert, i, dataclasses.replace(e, k=v))
            for v in (e.s + 1, e.s - 1):
                if v >= 0:
                    yield f"r={e.r} s={v}", i, _replace_evidence(cert, i, dataclasses.replace(e, s=v))
        elif isinstance(e, Witness):
            for v in (e.p + 1, e.p - 1, 2, 3, 5, 7):
                if v != e.p and v >= 0:
                    yield f"r={e.r} p={v}", i, _replace_evidence(cert, i, dataclasses.replace(e, p=v))
            for j in range(len(e.checked)):
                checked = list(e.checked)
                checked[j] += 1
                yield f"r={e.r} checked[{j}]", i, _replace_evidence(
                    cert, i, dataclasses.replace(e, checked=tuple(checked)))
        yield f"r={e.r} uncovered", i, _replace_evidence(cert, i, Uncovered(e.r))


TAMPER_PAIRS = [(2, 5), (6, 7), (8, 48), (8, 112), (10, 40), (12, 240), (18, 63)]


def test_valid_certificates(certs):
    for t, d in TAMPER_PAIRS:
        v = verify_certificate(certs(t, d))
        assert v.valid, v.failures


def test_verify_accepts_json_text_and_dict(certs):
    c = certs(8, 112)
    assert verify_certificate(c.to_json()).valid
    assert verify_certificate(c.to_json().encode()).valid
    assert verify_certificate(to_dict(c)).valid


def test_tampered_base_names_class(certs):
    c = certs(2, 5)
    e = c.evidence[3]
    assert e == PowerFactor(r=3, s=4, base=2, k=2)
    bad = _replace_evidence(c, 3, dataclasses.replace(e, base=1))
    v = verify_certificate(bad)
    assert not v.valid
    assert {f.r for f in v.failures} == {3}


def test_8_112_witness_classes(certs):
    c = certs(8, 112)
    assert verify_certificate(c).valid
    assert {e.r % 14 for e in c.witness_classes} == {2, 3, 11, 12}


@pytest.mark.parametrize("t, d", TAMPER_PAIRS)
def test_every_single_field_mutation_rejected(certs, t, d):
    c = certs(t, d)
    count = 0
    for label, i, bad in single_field_mutations(c):
        v = verify_certificate(bad)
        assert not v.valid, label
        assert any(f.r == bad.evidence[i].r for f in v.failures), label
        count += 1
    assert count > d


def test_structural_mutations_rejected(certs):
    c = certs(8, 48)
    cases = {
        "n0": dataclasses.replace(c, n0=c.n0 + 1),
        "class_modulus": dataclasses.replace(c, class_modulus=24),
        "dropped entry": dataclasses.replace(c, evidence=c.evidence[:-1]),
        "swapped entries": dataclasses.replace(
            c, evidence=(c.evidence[1], c.evidence[0]) + c.evidence[2:]),
        "extra exception": dataclasses.replace(c, exceptions=c.exceptions + ((95, 1),)),
    }
    for label, bad in cases.items():
        assert not verify_certificate(bad).valid, label


def test_exception_list_mutations_rejected(certs):
    c = certs(2, 5)
    assert not verify_certificate(dataclasses.replace(c, exceptions=c.exceptions[:2])).valid
    assert not verify_certificate(
        dataclasses.replace(c, exceptions=((4, 3), (5, 5), (6, 8)))).valid
    assert not verify_certificate(
        dataclasses.replace(c, exceptions=((4, 3), (5, 5), (6, 7), (7, 9)))).valid
    assert not verify_certificate(
        dataclasses.replace(c, exceptions=((5, 5), (4, 3), (6, 7)))).valid
    # an incomplete scan may legitimately omit exceptions
    assert verify_certificate(
        dataclasses.replace(c, exceptions=(), exceptions_complete=False)).valid


def test_noncanonical_but_sound_evidence_is_flagged():
    c = certify_pair(Pair(6, 7))
    e = c.evidence[0]
    assert e == PowerFactor(r=0, s=0, base=0, k=2)
    alt = _replace_evidence(c, 0, dataclasses.replace(e, k=3))
    assert verify_certificate(alt, strict=False).valid
    v = verify_certificate(alt)
    assert not v.valid and [f.clause for f in v.failures] == [6]


def test_witness_bound_enforced(certs):
    c = certs(10, 40)
    assert c.witness_primes == {5}
    assert not verify_certificate(c, witness_bound=3).valid


@pytest.mark.parametrize("text", ["", "[]", '{"pair": {}}', "null"])
def test_malformed_input_raises(text):
    with pytest.raises(CertificateFormatError):
        verify_certificate(text)


def test_verify_file(tmp_path, certs):
    path = tmp_path / "c.json"
    path.write_text(dumps(certs(2, 5)))
    assert verify_file(path).valid


@pytest.mark.parametrize("t, d", TAMPER_PAIRS + [(30, 1116), (36, 2664)])
def test_soundness_spot_check(certs, t, d):
    cert = certs(t, d) if d < 1000 else certify_pair(Pair(t, d))
    assert isinstance(cert, Certificate) and verify_certificate(cert).valid
    rng = random.Random(t * 10007 + d)
    for _ in range(100):
        n = rng.randrange(2 * d, 2 * d + 10 ** 6)
        assert not is_probable_prime(n ** t // d)
