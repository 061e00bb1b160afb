from __future__ import annotations

import os
from dataclasses import dataclass, field

from .combinat import DEFAULT_SIZE_CAP
from .modlinalg import DEFAULT_PRIME, PrimeField, fresh_seed

METHODS = ("direct", "reduced", "both")
SEED_ENV = "SECANT_SEED"


def default_seed() -> int:
    """``$SECANT_SEED`` if set, otherwise fresh entropy."""
    env = os.environ.get(SEED_ENV)
    if env:
        return int(env)
    return fresh_seed()


@dataclass(frozen=True)
class RunConfig:
    """Reproducibility and sizing knobs shared by every computation."""

    prime: int = DEFAULT_PRIME
    seed: int = field(default_factory=default_seed)
    trials: int = 2
    method: str = "both"
    size_cap: int = DEFAULT_SIZE_CAP

    def __post_init__(self):
        PrimeField(self.prime)
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.prime)

    def to_dict(self) -> dict:
        return {
            "prime": self.prime,
            "seed": self.seed,
            "trials": self.trials,
            "method": self.method,
            "size_cap": self.size_cap,
        }
