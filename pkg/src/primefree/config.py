"""Tunable defaults and the optional ``key=value`` config file."""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path

from .arith import DEFAULT_MR_ROUNDS
from .errors import DomainError

DEFAULT_WITNESS_BOUND = 97
DEFAULT_DIGIT_BUDGET = 10_000


@dataclass(frozen=True)
class Config:
    witness_bound: int = DEFAULT_WITNESS_BOUND
    mr_rounds: int = DEFAULT_MR_ROUNDS
    digit_budget: int = DEFAULT_DIGIT_BUDGET
    workers: int = 1
    find_exceptions: bool = True
    # Wall-clock cap for one certification; None disables it.
    max_seconds: float | None = None

    def __post_init__(self):
        if self.witness_bound < 2:
            raise DomainError("witness_bound must be >= 2")
        if self.mr_rounds < 1:
            raise DomainError("mr_rounds must be >= 1")
        if self.digit_budget < 1:
            raise DomainError("digit_budget must be >= 1")
        if self.workers < 1:
            raise DomainError("workers must be >= 1")

    def with_(self, **changes) -> "Config":
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


# Only these keys may be set from a file; everything else is fixed by the math.
FILE_KEYS = ("witness_bound", "mr_rounds", "digit_budget", "workers")


def parse_config(text: str, base: Config | None = None) -> Config:
    """Parse ``key=value`` lines; ``#`` starts a comment."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in FILE_KEYS:
            raise DomainError(f"config line {lineno}: unknown setting {raw.strip()!r}")
        try:
            values[key] = int(value.strip())
        except ValueError:
            raise DomainError(f"config line {lineno}: {key} needs an integer") from None
    return replace(base or Config(), **values)


def load_config(path: str | Path | None) -> Config:
    if path is None:
        return Config()
    return parse_config(Path(path).read_text())

