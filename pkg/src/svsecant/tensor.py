"""Segre-Veronese points as decomposable partially symmetric tensors.

A tensor for shape ``n`` and degree ``a`` has ``a_1 + ... + a_t`` axes: the
first ``a_1`` of length ``n_1 + 1``, the next ``a_2`` of length ``n_2 + 1``,
and so on.  It is partially symmetric when it is invariant under
permutations within each block of axes.  Entries are stored in full, so the
symmetry check is a real check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .combinat import VarietySpec, as_degree, as_shape, enumerate_monomials
from .fatpoints import PointTuple, evaluation_rows, monomial_exponent_array
from .modlinalg import FpMatrix, PrimeField, rank


@dataclass(frozen=True)
class PartialSymTensor:
    shape: tuple[int, ...]
    degree: tuple[int, ...]
    entries: np.ndarray
    field: PrimeField

    def __post_init__(self):
        shape = tuple(as_shape(self.shape))
        degree = tuple(as_degree(self.degree))
        expected = tuple(n + 1 for n, a in zip(shape, degree) for _ in range(a))
        arr = np.mod(np.asarray(self.entries, dtype=np.int64), self.field.p)
        if arr.shape != expected:
            raise ValueError(f"entries have shape {arr.shape}, expected {expected}")
        arr.setflags(write=False)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "entries", arr)

    def blocks(self) -> list[range]:
        """Axis ranges of the symmetric blocks."""
        out, start = [], 0
        for a in self.degree:
            out.append(range(start, start + a))
            start += a
        return out

    def __add__(self, other: "PartialSymTensor") -> "PartialSymTensor":
        if (self.shape, self.degree) != (other.shape, other.degree):
            raise ValueError("tensors of different formats")
        return PartialSymTensor(self.shape, self.degree,
                                (self.entries + other.entries) % self.field.p, self.field)

    @classmethod
    def zeros(cls, shape, degree, field: PrimeField) -> "PartialSymTensor":
        dims = tuple(n + 1 for n, a in zip(shape, degree) for _ in range(a))
        return cls(tuple(shape), tuple(degree), np.zeros(dims, dtype=np.int64), field)


def _outer(vectors: Sequence[np.ndarray], p: int) -> np.ndarray:
    out = np.ones((), dtype=np.int64)
    for v in vectors:
        out = np.multiply.outer(out, np.asarray(v, dtype=np.int64)) % p
    return out


def rank1_tensor(vectors: Sequence[Sequence[int]], shape, degree,
                 field: PrimeField | None = None) -> PartialSymTensor:
    """``v_1^{(x) a_1} (x) ... (x) v_t^{(x) a_t}``."""
    field = field or PrimeField()
    shape, degree = tuple(as_shape(shape)), tuple(as_degree(degree))
    if len(vectors) != len(shape):
        raise ValueError("need one vector per factor")
    vecs = []
    for v, n in zip(vectors, shape):
        v = np.asarray(v, dtype=np.int64) % field.p
        if v.shape != (n + 1,):
            raise ValueError(f"vector {v} should have length {n + 1}")
        if not v.any():
            raise ValueError("rank-one factors must be nonzero vectors")
        vecs.append(v)
    factors = [v for v, a in zip(vecs, degree) for _ in range(a)]
    return PartialSymTensor(shape, degree, _outer(factors, field.p), field)


def is_partially_symmetric(T: PartialSymTensor) -> bool:
    """Invariance under adjacent transpositions inside every block."""
    for block in T.blocks():
        for i in list(block)[:-1]:
            if not np.array_equal(T.entries, np.swapaxes(T.entries, i, i + 1)):
                return False
    return True


def index_content(T: PartialSymTensor, index: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """The multigraded monomial whose exponents count each coordinate in each block."""
    out = []
    for block, n in zip(T.blocks(), T.shape):
        row = [0] * (n + 1)
        for axis in block:
            row[index[axis]] += 1
        out.append(tuple(row))
    return tuple(out)


def embed_point(pt: PointTuple, spec: VarietySpec,
                field: PrimeField | None = None) -> tuple[np.ndarray, PartialSymTensor]:
    """Segre-Veronese coordinates of ``pt`` (in column order) and its rank-one tensor."""
    field = field or PrimeField()
    exps = monomial_exponent_array(spec.shape, spec.degree)
    coords = evaluation_rows(exps, pt.coordinates(), field.p, derivatives=False)[0]
    tensor = rank1_tensor(pt.blocks, spec.shape, spec.degree, field)
    return coords, tensor


def veronese_tensor_consistent(coords: np.ndarray, T: PartialSymTensor) -> bool:
    """Every tensor entry equals the coordinate of the monomial with the same content."""
    lookup = {m: k for k, m in enumerate(enumerate_monomials(T.shape, T.degree))}
    for index in np.ndindex(*T.entries.shape):
        if T.entries[index] != coords[lookup[index_content(T, index)]]:
            return False
    return True


def flattening(T: PartialSymTensor, row_axes: Sequence[int]) -> FpMatrix:
    axes = sorted(set(int(a) for a in row_axes))
    total = T.entries.ndim
    if not axes or len(axes) == total or any(not 0 <= a < total for a in axes):
        raise ValueError("row_axes must be a nonempty proper subset of the tensor axes")
    cols = [a for a in range(total) if a not in axes]
    arr = np.transpose(T.entries, axes + cols)
    nrows = int(np.prod([T.entries.shape[a] for a in axes]))
    return FpMatrix(T.field, arr.reshape(nrows, -1))


def flattening_rank(T: PartialSymTensor, row_axes: Sequence[int]) -> int:
    return rank(flattening(T, row_axes))


def tangent_span_rank(points: Sequence[PointTuple], spec: VarietySpec,
                      field: PrimeField | None = None) -> int:
    """Rank of all tangent directions of the cone over ``V`` at ``points``.

    Differentiates ``v_1^{(x) a_1} (x) ... `` in each coordinate of each
    ``v_i`` by the product rule, directly on tensors.  Equals ``dim V^s + 1``
    for generic points.
    """
    field = field or PrimeField()
    shape, degree = spec.shape.factors, spec.degree.degrees
    rows = []
    for pt in points:
        vecs = [np.asarray(b, dtype=np.int64) for b in pt.blocks]
        factors = [(i, v) for i, (v, a) in enumerate(zip(vecs, degree)) for _ in range(a)]
        for i, n in enumerate(shape):
            for j in range(n + 1):
                e = np.zeros(n + 1, dtype=np.int64)
                e[j] = 1
                acc = np.zeros([len(v) for _, v in factors], dtype=np.int64)
                for pos, (fi, _) in enumerate(factors):
                    if fi != i:
                        continue
                    term = [e if q == pos else v for q, (_, v) in enumerate(factors)]
                    acc = (acc + _outer(term, field.p)) % field.p
                rows.append(acc.ravel())
    if not rows:
        return 0
    return rank(FpMatrix(field, np.array(rows)))
