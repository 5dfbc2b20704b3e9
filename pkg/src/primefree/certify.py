"""Search for compositeness evidence, class by class, and assemble certificates.

The class modulus is always ``d``: ``n**t mod d`` depends only on ``n mod d``,
so one class per residue is enough for any pair.

Witness soundness. Write ``n = d*q + r``. Expanding the binomial,

    (d*q + r)**t = r**t + d * Q(q),    Q(q) = sum_{j>=1} C(t,j) d**(j-1) r**(t-j) q**j,

so ``floor(n**t / d) = Q(q) + floor(r**t / d)`` with ``Q`` an integer polynomial.
Its value modulo a prime ``p`` is therefore periodic in ``q`` with period ``p``,
and checking ``q = 0 .. p-1`` covers the whole class.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

from .arith import (decimal_digits_bound, divisors, floor_pow_div, int_kth_root,
                    is_probable_prime, mod_pow, primes_up_to)
from .certificate import (Certificate, CertificationFailure, ClassEvidence, Pair,
                          PowerFactor, Uncovered, Witness)
from .config import Config
from .errors import DigitBudgetExceeded, InvariantViolation, ResourceLimitError

log = logging.getLogger(__name__)


def residue_set(t: int, d: int) -> set[int]:
    """All values of ``n**t mod d``."""
    return {mod_pow(n, t, d) for n in range(d)}


def power_evidence(r: int, t: int, d: int) -> tuple[int, int, int] | None:
    """``(base, k, s)`` with ``base**k == s == r**t mod d`` and the least ``k | t``, ``k >= 2``."""
    s = mod_pow(r, t, d)
    for k in divisors(t)[1:]:
        base, exact = int_kth_root(s, k)
        if exact:
            return base, k, s
    return None


@lru_cache(maxsize=64)
def _primes(bound: int) -> tuple[int, ...]:
    return tuple(primes_up_to(bound))


def witness_residues(r: int, t: int, d: int, p: int) -> list[int]:
    """``floor((d*q + r)**t / d) mod p`` for ``q = 0 .. p-1``, computed modulo ``d*p``."""
    s = mod_pow(r, t, d)
    dp = d * p
    return [(mod_pow(d * q + r, t, dp) - s) // d % p for q in range(p)]


def divisibility_witness(r: int, t: int, d: int,
                         p_bound: int = 97) -> tuple[int, list[int]] | None:
    """Least prime ``p <= p_bound`` dividing every term of class ``r``, with its residues."""
    for p in _primes(p_bound):
        checked = witness_residues(r, t, d, p)
        if not any(checked):
            return p, checked
    return None


def classify(r: int, t: int, d: int, p_bound: int = 97) -> ClassEvidence:
    found = power_evidence(r, t, d)
    if found is not None:
        base, k, s = found
        return PowerFactor(r=r, s=s, base=base, k=k)
    found = divisibility_witness(r, t, d, p_bound)
    if found is not None:
        p, checked = found
        return Witness(r=r, p=p, checked=tuple(checked))
    return Uncovered(r=r)


def _classify_range(t: int, d: int, lo: int, hi: int, p_bound: int,
                    deadline: float | None) -> list[ClassEvidence]:
    out = []
    for r in range(lo, hi):
        if deadline is not None and time.monotonic() > deadline:
            raise ResourceLimitError(
                f"time limit exceeded while analysing class r={r} of pair ({t}, {d})")
        out.append(classify(r, t, d, p_bound))
    return out


def classify_all(pair: Pair, config: Config | None = None) -> tuple[ClassEvidence, ...]:
    config = config or Config()
    t, d = pair.t, pair.d
    deadline = None if config.max_seconds is None else time.monotonic() + config.max_seconds
    if config.workers == 1 or d < 4 * config.workers:
        return tuple(_classify_range(t, d, 0, d, config.witness_bound, deadline))
    step = -(-d // config.workers)
    bounds = [(lo, min(lo + step, d)) for lo in range(0, d, step)]
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        parts = pool.map(_classify_range, *zip(*[(t, d, lo, hi, config.witness_bound, deadline)
                                                  for lo, hi in bounds]))
        return tuple(e for part in parts for e in part)


def find_exceptions(pair: Pair, n0: int, digit_budget: int | None = None,
                    rounds: int = 40) -> list[tuple[int, int]]:
    """Every ``n`` in ``1 .. n0-1`` whose term is prime, with the term."""
    if n0 < 1:
        raise ValueError(f"n0 must be >= 1, got {n0}")
    t, d = pair.t, pair.d
    if digit_budget is not None and decimal_digits_bound(n0 - 1, t) > digit_budget:
        raise DigitBudgetExceeded(
            f"terms of {pair} below n0={n0} may exceed {digit_budget} digits", limiting_n=n0 - 1)
    found = []
    for n in range(1, n0):
        value = floor_pow_div(n, t, d)
        if is_probable_prime(value, rounds):
            found.append((n, value))
    return found


def _min_term_exceeds(t: int, d: int, p: int) -> bool:
    # floor((2d)**t / d) = 2**t * d**(t-1); stop multiplying once past p.
    acc = 2 ** min(t, p.bit_length() + 1)
    for _ in range(t - 1):
        if acc > p:
            return True
        acc *= d
    return acc > p


def certify_pair(pair: Pair, config: Config | None = None) -> Certificate | CertificationFailure:
    """Build a certificate for ``pair`` or report the classes that resist both arguments."""
    config = config or Config()
    evidence = classify_all(pair, config)
    uncovered = tuple(e.r for e in evidence if isinstance(e, Uncovered))
    if uncovered:
        log.info("pair %s: %d uncovered classes", pair, len(uncovered))
        return CertificationFailure(pair=pair, evidence=evidence, uncovered=uncovered)

    n0 = 2 * pair.d
    for e in evidence:
        if isinstance(e, Witness) and not _min_term_exceeds(pair.t, pair.d, e.p):
            raise InvariantViolation(
                f"witness prime {e.p} for class r={e.r} is not below every term past n0={n0}")

    exceptions: list[tuple[int, int]] = []
    complete = config.find_exceptions
    if complete:
        try:
            exceptions = find_exceptions(pair, n0, config.digit_budget, config.mr_rounds)
        except DigitBudgetExceeded as exc:
            log.warning("skipping exception scan: %s", exc)
            complete = False
    return Certificate(pair=pair, class_modulus=pair.d, evidence=evidence, n0=n0,
                       exceptions=tuple(exceptions), exceptions_complete=complete)
