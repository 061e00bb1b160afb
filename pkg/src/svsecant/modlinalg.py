"""Dense linear algebra over a prime field F_p.

Entries live in numpy ``int64`` arrays with values in ``[0, p)``.  The
modulus is bounded so that a product of two reduced entries, minus a reduced
entry, still fits in a signed 64-bit integer; every elimination step then
needs a single reduction.

Randomness: every stream is a numpy ``PCG64`` generator seeded from
``SeedSequence(seed, spawn_key=(trial,))``.  Fixing ``seed`` fixes every
point drawn by every trial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

import numpy as np

DEFAULT_PRIME = 2_147_483_647
MIN_PRIME = 10**6
# p * p + p must stay below 2**63.
MAX_PRIME = 3_037_000_493


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    if p % 3 == 0:
        return p == 3
    for d in range(5, isqrt(p) + 1, 6):
        if p % d == 0 or p % (d + 2) == 0:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        p = int(self.p)
        if p < MIN_PRIME:
            raise ValueError(f"prime {p} is below the minimum {MIN_PRIME}")
        if p > MAX_PRIME:
            raise ValueError(f"prime {p} is too large for 64-bit elimination")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "p", p)

    def inv(self, x: int) -> int:
        return pow(int(x), -1, self.p)


@dataclass(frozen=True)
class FpMatrix:
    """An immutable dense matrix over ``field``."""

    field: PrimeField
    entries: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("FpMatrix entries must be two-dimensional")
        arr = np.mod(arr, self.field.p)
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @classmethod
    def empty(cls, field: PrimeField, cols: int) -> "FpMatrix":
        return cls(field, np.zeros((0, cols), dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def transpose(self) -> "FpMatrix":
        return FpMatrix(self.field, self.entries.T)

    def vstack(self, other: "FpMatrix") -> "FpMatrix":
        return FpMatrix(self.field, np.vstack([self.entries, other.entries]))


def _row_reduce(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form in place; returns (matrix, pivot columns)."""
    m, n = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        others = np.flatnonzero(a[:, c])
        others = others[others != r]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: FpMatrix) -> int:
    """Exact rank over F_p by Gaussian elimination (first nonzero pivot)."""
    if m.rows == 0 or m.cols == 0:
        return 0
    a = np.array(m.entries, dtype=np.int64)
    p = m.field.p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        below = r + 1 + np.flatnonzero(a[r + 1:, c])
        if below.size:
            a[below] = (a[below] - np.outer(a[below, c], a[r])) % p
        r += 1
    return r


def nullspace(m: FpMatrix) -> np.ndarray:
    """Basis of the right kernel ``{v : m v = 0}``, one vector per row."""
    n = m.cols
    p = m.field.p
    if m.rows == 0:
        return np.eye(n, dtype=np.int64)
    red, pivots = _row_reduce(np.array(m.entries, dtype=np.int64), p)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-red[i, f]) % p
    return basis


def matvec(m: FpMatrix, v: np.ndarray) -> np.ndarray:
    """``m @ v`` over F_p, reducing term by term to stay in 64 bits."""
    p = m.field.p
    v = np.asarray(v, dtype=np.int64) % p
    out = np.zeros(m.rows, dtype=np.int64)
    for j in range(m.cols):
        out = (out + m.entries[:, j] * v[j]) % p
    return out


def trial_rng(seed: int, trial: int = 0) -> np.random.Generator:
    """Private generator for one trial; fully determined by ``(seed, trial)``."""
    ss = np.random.SeedSequence(int(seed), spawn_key=(int(trial),))
    return np.random.Generator(np.random.PCG64(ss))


def random_field_element(rng: np.random.Generator, field: PrimeField) -> int:
    return int(rng.integers(0, field.p, dtype=np.int64))


def random_matrix(rng: np.random.Generator, field: PrimeField, rows: int, cols: int) -> FpMatrix:
    return FpMatrix(field, rng.integers(0, field.p, size=(rows, cols), dtype=np.int64))


def fresh_seed() -> int:
    """A 63-bit seed drawn from OS entropy."""
    return int(np.random.SeedSequence().entropy % (2**63))


@dataclass(frozen=True)
class RankResult:
    """Generic rank as the maximum over independent random trials.

    A rank at random points can only fall below the generic rank, so ``rank``
    is a certified lower bound and, with overwhelming probability, exact.
    """

    rank: int
    prime: int
    seed: int
    trials: int
    per_trial_ranks: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.per_trial_ranks and self.rank != max(self.per_trial_ranks):
            raise ValueError("rank must equal the maximum per-trial rank")

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "prime": self.prime,
            "seed": self.seed,
            "trials": self.trials,
            "per_trial_ranks": list(self.per_trial_ranks),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RankResult":
        return cls(d["rank"], d["prime"], d["seed"], d["trials"], tuple(d["per_trial_ranks"]))


def max_over_trials(run_trial, trials: int) -> tuple[int, ...]:
    """Run ``run_trial(i)`` for ``i < trials``; add one tie-break trial on disagreement."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    ranks = [run_trial(i) for i in range(trials)]
    if len(set(ranks)) > 1:
        ranks.append(run_trial(trials))
    return tuple(ranks)
