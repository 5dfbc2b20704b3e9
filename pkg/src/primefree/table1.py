"""Published list of eventually prime-free pairs for 2 <= t <= 54.

Each row maps ``t`` to ``(d, bold)`` entries in published order. ``bold``
marks divisors ``d`` for which no proper divisor ``s`` of ``t`` was known to
make ``(s, d)`` prime-free.
"""

from __future__ import annotations

from .errors import DomainError


def _row(plain: str, bold: str) -> list[tuple[int, bool]]:
    b = {int(x) for x in bold.split()}
    entries = sorted({int(x) for x in plain.split()} | b)
    return [(d, d in b) for d in entries]


TABLE1: dict[int, list[tuple[int, bool]]] = {
    2: _row("", "2 3 4 5 8 12 16"),
    3: _row("", "2 9"),
    4: _row("2 3 4 5 8 12 16", "24 40"),
    6: _row("2 3 4 5 8 9 12 16", "7 24 56 72"),
    8: _row("2 3 4 5 8 12 16 24 40", "17 32 48 80 112"),
    10: _row("2 3 4 5 8 12 16", "11 24 40"),
    12: _row("2 3 4 5 8 9 12 16 24 40", "13 112 144 240"),
    16: _row("2 3 4 5 8 12 16 17 24 32 40 48 80 112", "64 544"),
    18: _row("2 3 4 5 7 8 9 12 16 24 56 72", "19 27 36 37 54 63 252"),
    20: _row("2 3 4 5 8 12 16 24 40", "25 200"),
    22: _row("2 3 4 5 8 12 16", "23"),
    24: _row("2 3 4 5 8 9 12 13 16 24 40 112 144 240", "73 208 288 576"),
    28: _row("2 3 4 5 8 12 16", "29"),
    30: _row("2 3 4 5 7 8 9 12 16 24 56 72", "31 1116"),
    32: _row("2 3 4 5 8 12 16 17 24 32 40 48 64 80 112 544", "128 192"),
    36: _row("2 3 4 5 7 8 9 12 16 19 24 27 36 37 54 56 63 72 252", "432 2664"),
    40: _row("2 3 4 5 8 12 16 17 24 25 32 40 48 80 112 200", "176 800 1968"),
    42: _row("2 3 4 5 7 8 9 12 16 24 56 72", "43 49"),
    50: _row("2 3 4 5 8 11 12 16 24 40", "101"),
    52: _row("2 3 4 5 8 12 16 24 40", "53"),
    54: _row("2 3 4 5 7 8 9 12 16 19 24 27 36 37 54 56 63 72 252", "81 1404"),
}


def table1_pairs(rows=None) -> list[tuple[int, int, bool]]:
    """Flatten to ``(t, d, bold)`` triples, optionally restricted to some ``t``."""
    wanted = sorted(TABLE1) if rows is None else list(rows)
    unknown = [t for t in wanted if t not in TABLE1]
    if unknown:
        raise DomainError(f"no table row for t in {unknown}")
    return [(t, d, bold) for t in wanted for d, bold in TABLE1[t]]
