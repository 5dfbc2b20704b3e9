"""Independent verification of compositeness certificates.

Only the primitives in :mod:`primefree.arith` are used here; nothing is shared
with the evidence search in :mod:`primefree.certify`, so a search bug cannot
hide behind a matching verification bug.

Why each evidence kind proves compositeness for ``n >= n0 = 2d``:

Power factor ``(s, base, k)``. With ``N = n**(t/k)`` we have
``d * floor(n**t/d) = N**k - base**k = A * B`` where ``A = N - base`` and
``B = N**(k-1) + N**(k-2)*base + ... + base**(k-1)``. Since ``base**k = s < d``,
``A >= 2d - base > d`` and ``B >= N**(k-1) >= 2d > d``. Put ``g = gcd(A, d)``;
``A/g`` and ``d/g`` are coprime, so ``d/g`` divides ``B`` and the term equals
``(A/g) * (B/(d/g))`` with both factors above 1.

Witness ``p``. Writing ``n = d*q + r``, the binomial theorem gives
``(d*q + r)**t = r**t + d*Q(q)`` for an integer polynomial ``Q``, hence
``floor(n**t/d) = Q(q) + floor(r**t/d)``. Modulo ``p`` this is a polynomial in
``q`` and repeats with period ``p``; if ``q = 0 .. p-1`` all give 0 then ``p``
divides every term of the class. Terms past ``n0`` are at least
``2**t * d**(t-1)``, which must exceed ``p`` for the term to be composite.

For the residue itself: with ``X = n**t`` and ``s = X mod d``,
``X mod d*p = d*(floor(X/d) mod p) + s``, so only arithmetic modulo ``d*p``
is needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from . import certificate as cert_io
from .arith import (floor_pow_div, int_kth_root, is_probable_prime, mod_pow,
                    primes_up_to)
from .certificate import Certificate, PowerFactor, Uncovered, Witness
from .config import DEFAULT_WITNESS_BOUND
from .errors import CertificateFormatError

# Clause numbers reported in failures.
STRUCTURE, POWER, WITNESS, THRESHOLD, EXCEPTIONS, CANONICAL = 1, 2, 3, 4, 5, 6


@dataclass(frozen=True)
class ClauseFailure:
    clause: int
    r: int | None
    message: str

    def __str__(self) -> str:
        where = "" if self.r is None else f" [r={self.r}]"
        return f"clause {self.clause}{where}: {self.message}"


@dataclass
class Verdict:
    valid: bool
    failures: list[ClauseFailure] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.valid

    def to_dict(self) -> dict[str, Any]:
        return {"valid": self.valid,
                "failures": [{"clause": f.clause, "r": None if f.r is None else str(f.r),
                              "message": f.message} for f in self.failures]}


def _is_kth_power(s: int, k: int) -> bool:
    return int_kth_root(s, k)[1]


def _residues_mod_p(r: int, t: int, d: int, p: int) -> list[int]:
    s = mod_pow(r, t, d)
    modulus = d * p
    out = []
    for q in range(p):
        x = mod_pow(d * q + r, t, modulus)
        out.append(((x - s) // d) % p)
    return out


def _below_terms_past_n0(p: int, t: int, d: int) -> bool:
    # Smallest term past n0 is 2**t * d**(t-1).
    bound = 2 ** min(t, p.bit_length() + 1)
    for _ in range(t - 1):
        if bound > p:
            break
        bound *= d
    return bound > p


def _check_power(e: PowerFactor, t: int, d: int, strict: bool) -> list[ClauseFailure]:
    bad = []
    if e.k < 2 or t % e.k:
        bad.append(ClauseFailure(POWER, e.r, f"k={e.k} is not a divisor of t={t} with k >= 2"))
    if not 0 <= e.s < d:
        bad.append(ClauseFailure(POWER, e.r, f"s={e.s} outside [0, {d})"))
    if not bad and (not 0 <= e.base < d or e.base ** e.k != e.s):
        bad.append(ClauseFailure(POWER, e.r, f"base**k = {e.base}**{e.k} != s={e.s}"))
    if mod_pow(e.r, t, d) != e.s:
        bad.append(ClauseFailure(POWER, e.r, f"r**t mod d = {mod_pow(e.r, t, d)} != s={e.s}"))
    if strict and not bad:
        smaller = [k for k in range(2, e.k) if t % k == 0 and _is_kth_power(e.s, k)]
        if smaller:
            bad.append(ClauseFailure(CANONICAL, e.r,
                                     f"k={e.k} is not minimal; s is already a {smaller[0]}-th power"))
    return bad


def _check_witness(e: Witness, t: int, d: int, bound: int, strict: bool) -> list[ClauseFailure]:
    bad = []
    if not 2 <= e.p <= bound or not is_probable_prime(e.p):
        return [ClauseFailure(WITNESS, e.r, f"p={e.p} is not a prime in [2, {bound}]")]
    if len(e.checked) != e.p:
        bad.append(ClauseFailure(WITNESS, e.r,
                                 f"checked has {len(e.checked)} entries, expected p={e.p}"))
    actual = _residues_mod_p(e.r, t, d, e.p)
    if any(actual):
        bad.append(ClauseFailure(WITNESS, e.r, f"p={e.p} does not divide every term of the class"))
    if list(e.checked) != actual:
        bad.append(ClauseFailure(WITNESS, e.r, "stored residues differ from recomputed residues"))
    if not _below_terms_past_n0(e.p, t, d):
        bad.append(ClauseFailure(WITNESS, e.r, f"p={e.p} is not below the terms past n0"))
    if strict and not bad:
        s = mod_pow(e.r, t, d)
        if any(_is_kth_power(s, k) for k in range(2, t + 1) if t % k == 0):
            bad.append(ClauseFailure(CANONICAL, e.r, "class admits power evidence"))
        else:
            for p in primes_up_to(e.p - 1):
                if not any(_residues_mod_p(e.r, t, d, p)):
                    bad.append(ClauseFailure(CANONICAL, e.r, f"smaller prime {p} also works"))
                    break
    return bad


def _check_exceptions(cert: Certificate, rounds: int) -> list[ClauseFailure]:
    t, d = cert.pair.t, cert.pair.d
    bad = []
    listed = dict()
    for n, value in cert.exceptions:
        if n in listed:
            bad.append(ClauseFailure(EXCEPTIONS, None, f"n={n} listed twice"))
        listed[n] = value
        if not 1 <= n < cert.n0:
            bad.append(ClauseFailure(EXCEPTIONS, None, f"exception n={n} outside [1, n0)"))
            continue
        if floor_pow_div(n, t, d) != value:
            bad.append(ClauseFailure(EXCEPTIONS, None, f"term at n={n} is not {value}"))
        elif not is_probable_prime(value, rounds):
            bad.append(ClauseFailure(EXCEPTIONS, None, f"listed term at n={n} is not prime"))
    if cert.exceptions_complete:
        if [n for n, _ in cert.exceptions] != sorted(listed):
            bad.append(ClauseFailure(EXCEPTIONS, None, "exceptions not sorted by n"))
        for n in range(1, cert.n0):
            if n in listed:
                continue
            if is_probable_prime(floor_pow_div(n, t, d), rounds):
                bad.append(ClauseFailure(EXCEPTIONS, None, f"prime term at n={n} not listed"))
    return bad


def verify_certificate(cert: Certificate | str | bytes | dict, *,
                       witness_bound: int = DEFAULT_WITNESS_BOUND,
                       rounds: int = 40, strict: bool = True) -> Verdict:
    """Check every clause of a certificate and collect all violations.

    ``cert`` may be a :class:`Certificate`, its JSON text, or the decoded JSON
    object. Structural problems in JSON input raise
    :class:`CertificateFormatError` instead of producing a verdict.

    With ``strict`` (the default) evidence must also be canonical: the least
    usable ``k`` for power evidence, and witnesses only for classes without
    power evidence, using the least working prime.
    """
    if isinstance(cert, (str, bytes)):
        cert = cert_io.loads(cert)
    elif isinstance(cert, dict):
        cert = cert_io.from_dict(cert)
    elif not isinstance(cert, Certificate):
        raise CertificateFormatError(f"cannot verify object of type {type(cert).__name__}")

    t, d = cert.pair.t, cert.pair.d
    failures: list[ClauseFailure] = []
    if cert.class_modulus != d:
        failures.append(ClauseFailure(STRUCTURE, None,
                                      f"class_modulus={cert.class_modulus} differs from d={d}"))
    if len(cert.evidence) != d:
        failures.append(ClauseFailure(STRUCTURE, None,
                                      f"{len(cert.evidence)} evidence entries, expected {d}"))
    for i, e in enumerate(cert.evidence):
        if e.r != i:
            failures.append(ClauseFailure(STRUCTURE, e.r, f"entry {i} is for class r={e.r}"))
            continue
        if isinstance(e, Uncovered):
            failures.append(ClauseFailure(STRUCTURE, e.r, "class is uncovered"))
        elif isinstance(e, PowerFactor):
            failures.extend(_check_power(e, t, d, strict))
        elif isinstance(e, Witness):
            failures.extend(_check_witness(e, t, d, witness_bound, strict))
    if cert.n0 != 2 * d:
        failures.append(ClauseFailure(THRESHOLD, None, f"n0={cert.n0}, expected 2d={2 * d}"))
    else:
        failures.extend(_check_exceptions(cert, rounds))
    return Verdict(valid=not failures, failures=failures)


def verify_file(path) -> Verdict:
    with open(path, "rb") as fh:
        return verify_certificate(fh.read())

