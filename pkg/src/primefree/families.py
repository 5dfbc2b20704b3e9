"""Infinite families of eventually prime-free pairs, and the Wilson-factorial sequence.

* ``fermat``:  ``(p-1, p)`` for an odd prime ``p``; every remainder is 0 or 1.
* ``q2p1``:    ``((p-1)/2, p)`` for primes ``p = q**2 + 1``; remainders lie in {0, 1, q**2}.
* ``q6q3p1``:  ``((p-1)/3, p)`` for primes ``p = q**6 + q**3 + 1``; remainders lie in
  {0, 1, q**3, q**6}, all perfect cubes.
* ``wilson``:  ``q_n = floor((p-1)! * (n**2 + c) / p)`` where ``-c-1`` is a non-residue
  mod ``p``. The remainder ``r`` of the division is never 1, so either ``(p-1)!``
  divides ``q_n`` or ``r`` (which divides ``(p-1)!``) does.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterator

from .arith import is_probable_prime, legendre, smallest_prime_factor
from .certificate import Pair
from .errors import DomainError, InvariantViolation


class FamilyKind(str, enum.Enum):
    FERMAT = "fermat"
    Q_SQUARE_PLUS_1 = "q2p1"
    Q_SIX_CUBE_PLUS_1 = "q6q3p1"
    WILSON = "wilson"


@dataclass(frozen=True)
class FamilyInstance:
    kind: FamilyKind
    p: int
    q: int | None = None
    c: int | None = None
    pair: Pair | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind.value, "p": str(self.p)}
        if self.q is not None:
            out["q"] = str(self.q)
        if self.c is not None:
            out["c"] = str(self.c)
        if self.pair is not None:
            out["pair"] = {"t": str(self.pair.t), "d": str(self.pair.d)}
        return out


def _require_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_probable_prime(p):
        raise DomainError(f"{p} is not an odd prime")


def fermat_pair(p: int) -> Pair:
    _require_odd_prime(p)
    return Pair(p - 1, p)


def fermat_instance(p: int) -> FamilyInstance:
    return FamilyInstance(FamilyKind.FERMAT, p=p, pair=fermat_pair(p))


def q2plus1_pairs(q_max: int) -> list[FamilyInstance]:
    """Instances for every even ``q <= q_max`` with ``q**2 + 1`` prime, ascending."""
    if q_max < 2:
        raise DomainError(f"q_max must be >= 2, got {q_max}")
    out = []
    for q in range(2, q_max + 1, 2):
        p = q * q + 1
        if is_probable_prime(p):
            out.append(FamilyInstance(FamilyKind.Q_SQUARE_PLUS_1, p=p, q=q,
                                      pair=Pair((p - 1) // 2, p)))
    return out


def q6q3plus1_pairs(q_max: int) -> list[FamilyInstance]:
    """Instances for every ``q <= q_max`` with ``q**6 + q**3 + 1`` a prime >= 5, ascending."""
    if q_max < 2:
        raise DomainError(f"q_max must be >= 2, got {q_max}")
    out = []
    for q in range(2, q_max + 1):
        p = q ** 6 + q ** 3 + 1
        if is_probable_prime(p):
            out.append(FamilyInstance(FamilyKind.Q_SIX_CUBE_PLUS_1, p=p, q=q,
                                      pair=Pair((p - 1) // 3, p)))
    return out


def wilson_params(p: int) -> list[int]:
    """Offsets ``c`` in ``0 .. p-1`` with ``-c-1`` a quadratic non-residue mod ``p``."""
    _require_odd_prime(p)
    return [c for c in range(p) if legendre((-c - 1) % p, p) == -1]


@lru_cache(maxsize=None)
def _factorial(m: int) -> int:
    return math.factorial(m)


@dataclass(frozen=True)
class WilsonTerm:
    n: int
    q_n: int
    remainder: int
    factor: int
    # True when factor >= q_n, so the divisibility says nothing about compositeness.
    degenerate: bool

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "q_n": str(self.q_n), "remainder": str(self.remainder),
                "factor": str(self.factor), "degenerate": self.degenerate}


def wilson_term_factor(p: int, c: int, n: int) -> WilsonTerm:
    """Exact ``q_n`` together with a prime factor below ``p`` that divides it."""
    _require_odd_prime(p)
    if legendre((-c - 1) % p, p) != -1:
        raise DomainError(f"-c-1 = {-c - 1} is a quadratic residue mod {p}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    q_n, r = divmod(_factorial(p - 1) * (n * n + c), p)
    if r == 1:
        raise InvariantViolation(f"remainder 1 at p={p}, c={c}, n={n}")
    # r = 0: (p-1)! divides q_n and (p-1)! is even for p >= 3.
    factor = 2 if r == 0 else smallest_prime_factor(r)
    if q_n % factor:
        raise InvariantViolation(f"{factor} does not divide q_n at p={p}, c={c}, n={n}")
    return WilsonTerm(n=n, q_n=q_n, remainder=r, factor=factor,
                      degenerate=not 1 < factor < q_n)


def wilson_terms(p: int, c: int, n_max: int) -> Iterator[WilsonTerm]:
    for n in range(1, n_max + 1):
        yield wilson_term_factor(p, c, n)


def wilson_instances(p: int) -> list[FamilyInstance]:
    return [FamilyInstance(FamilyKind.WILSON, p=p, c=c) for c in wilson_params(p)]
