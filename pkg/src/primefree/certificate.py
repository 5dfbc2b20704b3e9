"""Data model for compositeness certificates and their canonical JSON form.

A certificate for the pair ``(t, d)`` carries one piece of evidence per
residue class ``r`` of ``n`` modulo ``d``:

* ``PowerFactor`` -- the remainder ``s = r**t mod d`` is a perfect ``k``-th
  power ``base**k`` with ``k | t``. Then ``d * floor(n**t/d) = n**t - base**k``
  splits as a difference of ``k``-th powers, and both factors exceed ``d``
  once ``n >= 2d``.
* ``Witness`` -- a prime ``p`` divides every term of the class. ``checked``
  holds the residues of the first ``p`` terms of the class modulo ``p``.
* ``Uncovered`` -- neither argument applied.

Integers are serialized as decimal strings so that arbitrary sizes survive a
round trip through any JSON consumer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Union

from .errors import CertificateFormatError, DomainError


@dataclass(frozen=True, order=True)
class Pair:
    """Exponent/divisor pair naming the sequence ``floor(n**t / d)``."""

    t: int
    d: int

    def __post_init__(self):
        if not isinstance(self.t, int) or not isinstance(self.d, int):
            raise DomainError(f"pair entries must be integers, got {self!r}")
        if self.t < 2 or self.d < 2:
            raise DomainError(f"pair needs t >= 2 and d >= 2, got (t={self.t}, d={self.d})")

    def __str__(self) -> str:
        return f"({self.t}, {self.d})"


@dataclass(frozen=True)
class PowerFactor:
    r: int
    s: int
    base: int
    k: int


@dataclass(frozen=True)
class Witness:
    r: int
    p: int
    checked: tuple[int, ...]


@dataclass(frozen=True)
class Uncovered:
    r: int


ClassEvidence = Union[PowerFactor, Witness, Uncovered]


@dataclass(frozen=True)
class Certificate:
    pair: Pair
    class_modulus: int
    evidence: tuple[ClassEvidence, ...]
    n0: int
    exceptions: tuple[tuple[int, int], ...] = ()
    exceptions_complete: bool = True

    @property
    def power_classes(self) -> list[PowerFactor]:
        return [e for e in self.evidence if isinstance(e, PowerFactor)]

    @property
    def witness_classes(self) -> list[Witness]:
        return [e for e in self.evidence if isinstance(e, Witness)]

    @property
    def witness_primes(self) -> set[int]:
        return {e.p for e in self.witness_classes}

    def to_json(self) -> str:
        return dumps(self)


@dataclass(frozen=True)
class CertificationFailure:
    """Outcome of ``certify_pair`` when at least one class resists both arguments."""

    pair: Pair
    evidence: tuple[ClassEvidence, ...]
    uncovered: tuple[int, ...] = field(default=())

    def __bool__(self) -> bool:
        return False


# -- serialization ----------------------------------------------------------

def _evidence_to_dict(e: ClassEvidence) -> dict[str, Any]:
    if isinstance(e, PowerFactor):
        return {"type": "power", "r": str(e.r), "s": str(e.s),
                "base": str(e.base), "k": str(e.k)}
    if isinstance(e, Witness):
        return {"type": "witness", "r": str(e.r), "p": str(e.p),
                "checked": [str(v) for v in e.checked]}
    if isinstance(e, Uncovered):
        return {"type": "uncovered", "r": str(e.r)}
    raise TypeError(f"not class evidence: {e!r}")


def to_dict(cert: Certificate) -> dict[str, Any]:
    return {
        "pair": {"t": str(cert.pair.t), "d": str(cert.pair.d)},
        "class_modulus": str(cert.class_modulus),
        "evidence": [_evidence_to_dict(e) for e in cert.evidence],
        "n0": str(cert.n0),
        "exceptions": [{"n": str(n), "value": str(v)} for n, v in cert.exceptions],
        "exceptions_complete": cert.exceptions_complete,
    }


def dumps(cert: Certificate) -> str:
    """Canonical JSON: sorted keys, no insignificant whitespace."""
    return json.dumps(to_dict(cert), sort_keys=True, separators=(",", ":"))


def _int(obj: Any, where: str) -> int:
    # Decimal strings only; bools and floats are rejected outright.
    if not isinstance(obj, str) or not obj.isascii():
        raise CertificateFormatError(f"{where}: expected decimal string, got {obj!r}")
    body = obj[1:] if obj.startswith("-") else obj
    if not body.isdigit() or (len(body) > 1 and body[0] == "0"):
        raise CertificateFormatError(f"{where}: not a canonical decimal integer: {obj!r}")
    return int(obj)


def _keys(obj: Any, expected: set[str], where: str) -> dict:
    if not isinstance(obj, dict):
        raise CertificateFormatError(f"{where}: expected object, got {type(obj).__name__}")
    if set(obj) != expected:
        raise CertificateFormatError(
            f"{where}: keys {sorted(obj)} do not match expected {sorted(expected)}")
    return obj


def _evidence_from_dict(obj: Any, where: str) -> ClassEvidence:
    if not isinstance(obj, dict) or "type" not in obj:
        raise CertificateFormatError(f"{where}: evidence entry needs a 'type' tag")
    kind = obj["type"]
    if kind == "power":
        _keys(obj, {"type", "r", "s", "base", "k"}, where)
        return PowerFactor(r=_int(obj["r"], f"{where}.r"), s=_int(obj["s"], f"{where}.s"),
                           base=_int(obj["base"], f"{where}.base"),
                           k=_int(obj["k"], f"{where}.k"))
    if kind == "witness":
        _keys(obj, {"type", "r", "p", "checked"}, where)
        checked = obj["checked"]
        if not isinstance(checked, list):
            raise CertificateFormatError(f"{where}.checked: expected list")
        return Witness(r=_int(obj["r"], f"{where}.r"), p=_int(obj["p"], f"{where}.p"),
                       checked=tuple(_int(v, f"{where}.checked[{i}]")
                                     for i, v in enumerate(checked)))
    if kind == "uncovered":
        _keys(obj, {"type", "r"}, where)
        return Uncovered(r=_int(obj["r"], f"{where}.r"))
    raise CertificateFormatError(f"{where}: unknown evidence type {kind!r}")


def from_dict(obj: Any) -> Certificate:
    top = _keys(obj, {"pair", "class_modulus", "evidence", "n0", "exceptions",
                      "exceptions_complete"}, "certificate")
    pair_obj = _keys(top["pair"], {"t", "d"}, "pair")
    try:
        pair = Pair(_int(pair_obj["t"], "pair.t"), _int(pair_obj["d"], "pair.d"))
    except DomainError as exc:
        raise CertificateFormatError(str(exc)) from exc
    if not isinstance(top["evidence"], list):
        raise CertificateFormatError("evidence: expected list")
    if not isinstance(top["exceptions"], list):
        raise CertificateFormatError("exceptions: expected list")
    if not isinstance(top["exceptions_complete"], bool):
        raise CertificateFormatError("exceptions_complete: expected boolean")
    exceptions = []
    for i, item in enumerate(top["exceptions"]):
        item = _keys(item, {"n", "value"}, f"exceptions[{i}]")
        exceptions.append((_int(item["n"], f"exceptions[{i}].n"),
                           _int(item["value"], f"exceptions[{i}].value")))
    return Certificate(
        pair=pair,
        class_modulus=_int(top["class_modulus"], "class_modulus"),
        evidence=tuple(_evidence_from_dict(e, f"evidence[{i}]")
                       for i, e in enumerate(top["evidence"])),
        n0=_int(top["n0"], "n0"),
        exceptions=tuple(exceptions),
        exceptions_complete=top["exceptions_complete"],
    )


def loads(text: str | bytes) -> Certificate:
    try:
        obj = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise CertificateFormatError(f"invalid JSON: {exc}") from exc
    return from_dict(obj)
