"""Multiprojective-affine-projective reduction.

The rational map ``f: P^{n_1} x ... x P^{n_t} --> P^n`` sends a point of the
chart ``x_{0,1} ... x_{0,t} != 0`` to ``(1, x_{1,1}/x_{0,1}, ..., x_{n_t,t}/x_{0,t})``.
Degree-``a`` forms on ``P^n`` lying in the ideal of the fat coordinate
subspaces ``(a - a_i) Pi_i`` are spanned by the monomials
``z_0^{a - s_1 - ... - s_t} M_1 ... M_t`` with ``M_i`` of degree ``s_i <= a_i``
in the factor-``i`` variables (the claim basis).  Imposing the projected
points on that span gives the same ideal dimension as the multigraded
computation; the fat subspaces are never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .combinat import DEFAULT_SIZE_CAP, as_degree, as_shape, enumerate_monomials
from .config import RunConfig
from .fatpoints import (
    FatPointScheme,
    PointTuple,
    conditions_matrix,
    sample_scheme,
    stack_condition_rows,
)
from .modlinalg import FpMatrix, PrimeField, rank, trial_rng


@dataclass(frozen=True)
class ProjectedPoint:
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if not coords or coords[0] != 1:
            raise ValueError("projected points must have z_0 = 1")
        object.__setattr__(self, "coords", coords)


@dataclass(frozen=True)
class ClaimBasis:
    """Monomials in ``z_0, z_{1,1}, ..., z_{n_t,t}`` aligned with the multigraded basis.

    ``source_degrees[k]`` is ``(s_1, ..., s_t)`` for ``monomials[k]``.
    """

    monomials: tuple[tuple[int, ...], ...]
    source_degrees: tuple[tuple[int, ...], ...]
    total_degree: int

    def __len__(self):
        return len(self.monomials)

    def exponent_array(self, nvars: int) -> np.ndarray:
        if not self.monomials:
            return np.zeros((0, nvars), dtype=np.int64)
        return np.array(self.monomials, dtype=np.int64)


def project_point(pt: PointTuple) -> ProjectedPoint:
    """Image under ``f``; on a chart-normalized point this drops every ``x_{0,i}``."""
    return ProjectedPoint((1, *(x for block in pt.blocks for x in block[1:])))


def claim_basis(shape, degree, size_cap: int = DEFAULT_SIZE_CAP) -> ClaimBasis:
    """Dehomogenize then rehomogenize each multigraded monomial, in column order."""
    shape, degree = as_shape(shape), as_degree(degree)
    if any(a < 1 for a in degree):
        raise ValueError("the claim basis is defined for degrees >= 1")
    a = degree.total
    monos, sources = [], []
    for m in enumerate_monomials(shape, degree, size_cap):
        # the x_{0,i} exponent of factor i is a_i - s_i
        s = tuple(ai - row[0] for ai, row in zip(degree, m))
        rest = tuple(e for row in m for e in row[1:])
        monos.append((a - sum(s), *rest))
        sources.append(s)
    return ClaimBasis(tuple(monos), tuple(sources), a)


def reduced_conditions_matrix(shape, degree, points: Sequence[PointTuple], multiplicity: int,
                              size_cap: int = DEFAULT_SIZE_CAP,
                              field: PrimeField | None = None) -> FpMatrix:
    """Conditions of the projected points on the claim-basis span in ``P^n``.

    A 2-fat point contributes all ``n + 1`` partials ``d/dz_0, d/dz_{j,i}``.
    """
    field = field or PrimeField()
    shape = as_shape(shape)
    basis = claim_basis(shape, degree, size_cap)
    exps = basis.exponent_array(shape.n_total + 1)
    coords = [project_point(pt).coords for pt in points]
    return stack_condition_rows(exps, coords, multiplicity, field)


@dataclass(frozen=True)
class EquivalenceCheck:
    agree: bool
    direct_rank: int
    reduced_rank: int
    columns: int


def compare_methods(shape, degree, points: Sequence[PointTuple], multiplicity: int,
                    field: PrimeField, size_cap: int = DEFAULT_SIZE_CAP) -> EquivalenceCheck:
    """Rank both condition matrices on the same point set."""
    shape = as_shape(shape)
    scheme = FatPointScheme(shape, tuple(points), multiplicity)
    direct = conditions_matrix(scheme, degree, size_cap, field) if points else None
    reduced = reduced_conditions_matrix(shape, degree, points, multiplicity, size_cap, field)
    r_direct = rank(direct) if direct is not None else 0
    r_reduced = rank(reduced)
    return EquivalenceCheck(r_direct == r_reduced, r_direct, r_reduced, reduced.cols)


def verify_reduction(shape, degree, s: int, config: RunConfig,
                       multiplicity: int = 2) -> EquivalenceCheck:
    """Sample one point set and compare the multigraded and reduced ranks on it."""
    field = config.field
    scheme = sample_scheme(shape, s, multiplicity, trial_rng(config.seed), field)
    return compare_methods(shape, degree, scheme.points, multiplicity, field, config.size_cap)
