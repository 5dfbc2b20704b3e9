"""Empirical prime census of ``floor(n**t / d)`` and reproduction of the published table."""

from __future__ import annotations

import csv
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable

from .arith import decimal_digits_bound, divisors, floor_pow_div, is_probable_prime
from .certificate import Certificate, CertificationFailure, Pair, PowerFactor
from .certify import certify_pair
from .checker import Verdict, verify_certificate
from .config import Config
from .errors import DigitBudgetExceeded, DomainError
from .table1 import table1_pairs


@dataclass
class ScanReport:
    pair: Pair
    n_max: int
    primes: list[tuple[int, int]]
    terms_scanned: int
    duration: float

    def to_dict(self) -> dict[str, Any]:
        return {"pair": {"t": str(self.pair.t), "d": str(self.pair.d)},
                "n_max": str(self.n_max),
                "primes": [{"n": str(n), "value": str(v)} for n, v in self.primes],
                "terms_scanned": str(self.terms_scanned),
                "duration": round(self.duration, 6)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def _limiting_n(t: int, digit_budget: int) -> int:
    # First n whose term may exceed the budget under decimal_digits_bound.
    return 10 ** (digit_budget // t)


def _check_budget(pair: Pair, n_max: int, digit_budget: int) -> None:
    if decimal_digits_bound(n_max, pair.t) > digit_budget:
        n = _limiting_n(pair.t, digit_budget)
        raise DigitBudgetExceeded(
            f"terms of {pair} exceed {digit_budget} digits from n={n} on (n_max={n_max})",
            limiting_n=n)


def _scan_range(t: int, d: int, lo: int, hi: int, rounds: int) -> list[tuple[int, int]]:
    out = []
    for n in range(lo, hi):
        v = floor_pow_div(n, t, d)
        if is_probable_prime(v, rounds):
            out.append((n, v))
    return out


def scan_primes(pair: Pair, n_max: int, *, config: Config | None = None) -> ScanReport:
    """Every prime term for ``n = 1 .. n_max``."""
    config = config or Config()
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    _check_budget(pair, n_max, config.digit_budget)
    start = time.perf_counter()
    t, d = pair.t, pair.d
    if config.workers == 1 or n_max < 1000:
        primes = _scan_range(t, d, 1, n_max + 1, config.mr_rounds)
    else:
        step = -(-n_max // config.workers)
        chunks = [(lo, min(lo + step, n_max + 1)) for lo in range(1, n_max + 1, step)]
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            parts = pool.map(_scan_range, *zip(*[(t, d, lo, hi, config.mr_rounds)
                                                 for lo, hi in chunks]))
            primes = sorted(x for part in parts for x in part)
    return ScanReport(pair=pair, n_max=n_max, primes=primes, terms_scanned=n_max,
                      duration=time.perf_counter() - start)


def write_scan_csv(pair: Pair, n_max: int, path, *, config: Config | None = None) -> None:
    """Rows ``n, value-digit-count, is_prime`` for plotting."""
    config = config or Config()
    _check_budget(pair, n_max, config.digit_budget)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "digits", "is_prime"])
        for n in range(1, n_max + 1):
            v = floor_pow_div(n, pair.t, pair.d)
            w.writerow([n, len(str(v)), int(is_probable_prime(v, config.mr_rounds))])


# -- published table ----------------------------------------------------------

@dataclass
class Table1Outcome:
    pair: Pair
    certified: bool
    seconds: float
    bold: bool
    result: Certificate | CertificationFailure
    verdict: Verdict | None = None
    # Proper divisors s >= 2 of t for which (s, d) also certifies.
    certified_divisors: list[int] = field(default_factory=list)

    @property
    def tool_primitive(self) -> bool:
        return self.certified and not self.certified_divisors

    @property
    def ok(self) -> bool:
        return self.certified and (self.verdict is None or self.verdict.valid)

    def to_dict(self) -> dict[str, Any]:
        return {"t": self.pair.t, "d": self.pair.d, "certified": self.certified,
                "verified": None if self.verdict is None else self.verdict.valid,
                "bold": self.bold, "tool_primitive": self.tool_primitive,
                "certified_divisors": self.certified_divisors,
                "witness_primes": sorted(self.result.witness_primes) if self.certified else [],
                "seconds": round(self.seconds, 4)}


def reproduce_table1(rows: Iterable[int] | None = None, *, config: Config | None = None,
                     verify: bool = True, primitivity: bool = True) -> list[Table1Outcome]:
    """Certify (and optionally verify) every published pair."""
    config = config or Config()
    quick = config.with_(find_exceptions=False)
    outcomes = []
    for t, d, bold in table1_pairs(rows):
        pair = Pair(t, d)
        start = time.perf_counter()
        result = certify_pair(pair, config)
        seconds = time.perf_counter() - start
        certified = isinstance(result, Certificate)
        verdict = None
        if verify and certified:
            verdict = verify_certificate(result, witness_bound=config.witness_bound,
                                         rounds=config.mr_rounds)
        below = []
        if primitivity:
            below = [s for s in divisors(t)[1:-1]
                     if isinstance(certify_pair(Pair(s, d), quick), Certificate)]
        outcomes.append(Table1Outcome(pair, certified, seconds, bold, result, verdict, below))
    return outcomes


# -- cross-check --------------------------------------------------------------

@dataclass
class CrosscheckResult:
    ok: bool
    checked_up_to: int
    partial: bool = False
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def power_factor_split(n: int, e: PowerFactor, t: int, d: int) -> tuple[int, int]:
    """Split ``floor(n**t/d)`` as ``(A/g) * (B/(d/g))`` for a power-factor class."""
    big_n = n ** (t // e.k)
    a = big_n - e.base
    b = sum(big_n ** j * e.base ** (e.k - 1 - j) for j in range(e.k))
    g = math.gcd(a, d)
    return a // g, b // (d // g)


def composite_crosscheck(cert: Certificate, span: int, *,
                         config: Config | None = None) -> CrosscheckResult:
    """Brute-force the sequence on ``[n0, n0 + span]``.

    This tests the sequence, not the evidence: a tampered certificate for a
    genuinely prime-free pair still passes. Use the checker for the evidence.
    """
    config = config or Config()
    if span < 1:
        raise DomainError(f"span must be >= 1, got {span}")
    t, d = cert.pair.t, cert.pair.d
    by_class = {e.r: e for e in cert.evidence}
    failures = []
    last = cert.n0 - 1
    partial = False
    for n in range(cert.n0, cert.n0 + span + 1):
        if decimal_digits_bound(n, t) > config.digit_budget:
            partial = True
            break
        value = floor_pow_div(n, t, d)
        if is_probable_prime(value, config.mr_rounds):
            failures.append(f"n={n}: term is prime")
        e = by_class.get(n % d)
        if isinstance(e, PowerFactor):
            x, y = power_factor_split(n, e, t, d)
            if x * y != value or x < 2 or y < 2:
                failures.append(f"n={n}: power factorization does not reproduce the term")
        last = n
    return CrosscheckResult(ok=not failures, checked_up_to=last, partial=partial,
                            failures=failures)
