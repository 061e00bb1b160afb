"""Generic simple and 2-fat points in multiprojective space.

The number of conditions a scheme ``Z`` of ``s`` generic 2-fat points
imposes on forms of multidegree ``a`` is ``H(Z, a)``, and by Terracini's
lemma ``dim V^s = H(Z, a) - 1``.  Conditions are written as rows of a
matrix whose columns are the monomials of multidegree ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .combinat import (
    DEFAULT_SIZE_CAP,
    Shape,
    as_degree,
    as_shape,
    enumerate_monomials,
    flatten_exponents,
)
from .config import RunConfig
from .modlinalg import (
    FpMatrix,
    PrimeField,
    RankResult,
    max_over_trials,
    rank,
    trial_rng,
)

MAX_RESAMPLES = 100


@dataclass(frozen=True)
class PointTuple:
    """A point of ``P^{n_1} x ... x P^{n_t}`` in the chart ``x_{0,i} = 1``."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(int(x) for x in b) for b in self.blocks)
        for b in blocks:
            if len(b) < 2:
                raise ValueError("each block needs at least two coordinates")
            if b[0] != 1:
                raise ValueError("points must be chart-normalized (x_{0,i} = 1)")
        object.__setattr__(self, "blocks", blocks)

    @property
    def shape(self) -> Shape:
        return Shape(tuple(len(b) - 1 for b in self.blocks))

    def coordinates(self) -> tuple[int, ...]:
        """All ``n + t`` homogeneous coordinates, factor by factor."""
        return tuple(x for b in self.blocks for x in b)


@dataclass(frozen=True)
class FatPointScheme:
    shape: Shape
    points: tuple[PointTuple, ...]
    multiplicity: int = 2

    def __post_init__(self):
        if self.multiplicity not in (1, 2):
            raise ValueError("multiplicity must be 1 or 2")
        if len(set(self.points)) != len(self.points):
            raise ValueError("points must be pairwise distinct")
        for pt in self.points:
            if pt.shape != self.shape:
                raise ValueError(f"point {pt} does not match shape {self.shape}")

    def __len__(self):
        return len(self.points)


def sample_points(rng: np.random.Generator, shape, s: int, field: PrimeField) -> list[PointTuple]:
    """Draw ``s`` distinct uniform chart-normalized points, in order."""
    shape = as_shape(shape)
    seen: set[PointTuple] = set()
    points: list[PointTuple] = []
    for _ in range(s):
        for _attempt in range(MAX_RESAMPLES):
            blocks = tuple(
                (1, *(int(x) for x in rng.integers(0, field.p, size=n, dtype=np.int64)))
                for n in shape
            )
            pt = PointTuple(blocks)
            if pt not in seen:
                break
        else:
            raise RuntimeError(f"{MAX_RESAMPLES} consecutive point collisions; field too small?")
        seen.add(pt)
        points.append(pt)
    return points


def sample_scheme(shape, s: int, multiplicity: int, seed, field: PrimeField) -> FatPointScheme:
    """``s`` generic points; ``seed`` is an int or a numpy Generator."""
    if s < 1:
        raise ValueError("s must be >= 1")
    rng = seed if isinstance(seed, np.random.Generator) else trial_rng(seed)
    shape = as_shape(shape)
    return FatPointScheme(shape, tuple(sample_points(rng, shape, s, field)), multiplicity)


def _power_table(values: Sequence[int], max_exp: int, p: int) -> np.ndarray:
    table = np.ones((len(values), max_exp + 1), dtype=np.int64)
    for v, x in enumerate(values):
        for k in range(1, max_exp + 1):
            table[v, k] = table[v, k - 1] * x % p
    return table


def _monomial_values(exps: np.ndarray, powers: np.ndarray, p: int) -> np.ndarray:
    acc = np.ones(exps.shape[0], dtype=np.int64)
    for v in range(exps.shape[1]):
        acc = acc * powers[v, exps[:, v]] % p
    return acc


def evaluation_rows(exps: np.ndarray, values: Sequence[int], p: int, derivatives: bool) -> np.ndarray:
    """Rows for one point.

    ``exps`` is a (monomials x variables) exponent array and ``values`` the
    point's coordinates in the same variable order.  With ``derivatives``
    the rows are every first partial ``dM/dx_v`` at the point (one row per
    variable); otherwise the single row of values ``M(point)``.
    """
    exps = np.asarray(exps, dtype=np.int64)
    max_exp = int(exps.max(initial=0))
    powers = _power_table(values, max_exp, p)
    if not derivatives:
        return _monomial_values(exps, powers, p)[None, :]
    rows = np.zeros((exps.shape[1], exps.shape[0]), dtype=np.int64)
    for v in range(exps.shape[1]):
        coeff = exps[:, v]
        lowered = exps.copy()
        lowered[:, v] = np.maximum(coeff - 1, 0)
        rows[v] = coeff * _monomial_values(lowered, powers, p) % p
    return rows


def stack_condition_rows(exps: np.ndarray, coords: Sequence[Sequence[int]], multiplicity: int,
                         field: PrimeField) -> FpMatrix:
    exps = np.asarray(exps, dtype=np.int64)
    if not coords:
        return FpMatrix.empty(field, exps.shape[0])
    blocks = [evaluation_rows(exps, c, field.p, multiplicity == 2) for c in coords]
    return FpMatrix(field, np.vstack(blocks))


def monomial_exponent_array(shape, degree, size_cap: int = DEFAULT_SIZE_CAP) -> np.ndarray:
    monos = enumerate_monomials(shape, degree, size_cap)
    nvars = as_shape(shape).n_total + len(as_shape(shape))
    if not monos:
        return np.zeros((0, nvars), dtype=np.int64)
    return np.array([flatten_exponents(m) for m in monos], dtype=np.int64)


def conditions_matrix(scheme: FatPointScheme, degree, size_cap: int = DEFAULT_SIZE_CAP,
                      field: PrimeField | None = None) -> FpMatrix:
    """Vanishing conditions of ``scheme`` on forms of multidegree ``degree``.

    Columns follow :func:`enumerate_monomials`.  A 2-fat point contributes
    all ``n + t`` homogeneous first partials; by the per-factor Euler
    relations they span exactly ``n + 1`` conditions when every degree is
    positive.  A simple point contributes one evaluation row.
    """
    field = field or PrimeField()
    degree = as_degree(degree)
    exps = monomial_exponent_array(scheme.shape, degree, size_cap)
    coords = [pt.coordinates() for pt in scheme.points]
    return stack_condition_rows(exps, coords, scheme.multiplicity, field)


def hilbert_function(shape, s: int, multiplicity: int, degree,
                     config: RunConfig) -> RankResult:
    """``H(Z, degree)`` for ``s`` generic points of the given multiplicity.

    Each trial draws fresh points from its own stream; the result is the
    maximum rank over trials.
    """
    shape, degree = as_shape(shape), as_degree(degree)
    field = config.field
    exps = monomial_exponent_array(shape, degree, config.size_cap)

    def run(trial: int) -> int:
        if s == 0:
            return 0
        pts = sample_points(trial_rng(config.seed, trial), shape, s, field)
        return rank(stack_condition_rows(exps, [pt.coordinates() for pt in pts],
                                         multiplicity, field))

    ranks = max_over_trials(run, config.trials)
    return RankResult(max(ranks), field.p, config.seed, len(ranks), ranks)


def ideal_dimension(shape, s: int, multiplicity: int, degree, config: RunConfig) -> int:
    """``dim (I_Z)_degree = dim R_degree - H(Z, degree)``."""
    exps = monomial_exponent_array(shape, degree, config.size_cap)
    return exps.shape[0] - hilbert_function(shape, s, multiplicity, degree, config).rank

