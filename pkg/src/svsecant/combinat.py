"""Shapes, multidegrees and monomial bookkeeping for Segre-Veronese varieties.

A variety ``V_{n,a}`` is the image of ``P^{n_1} x ... x P^{n_t}`` under the
forms of multidegree ``a``.  Everything downstream indexes matrix columns by
:func:`enumerate_monomials`, so the ordering defined here is load-bearing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from math import comb, prod
from typing import Sequence

DEFAULT_SIZE_CAP = 200_000
INT64_MAX = 2**63 - 1


class SizeCapError(ValueError):
    """Raised when an instance exceeds the configured monomial cap."""


def _as_int_tuple(values: Sequence[int], name: str) -> tuple[int, ...]:
    out = tuple(int(v) for v in values)
    if any(v != w for v, w in zip(out, values)):
        raise TypeError(f"{name} entries must be integers")
    return out


@dataclass(frozen=True)
class Shape:
    """Factor dimensions ``(n_1, ..., n_t)`` of a multiprojective space."""

    factors: tuple[int, ...]

    def __post_init__(self):
        factors = _as_int_tuple(self.factors, "shape")
        if not factors:
            raise ValueError("a shape needs at least one factor")
        if any(n < 1 for n in factors):
            raise ValueError(f"every factor dimension must be >= 1, got {factors}")
        object.__setattr__(self, "factors", factors)

    @property
    def t(self) -> int:
        return len(self.factors)

    @property
    def n_total(self) -> int:
        return sum(self.factors)

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)


@dataclass(frozen=True)
class Multidegree:
    """Per-factor degrees ``(a_1, ..., a_t)``; zero entries are allowed."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        degrees = _as_int_tuple(self.degrees, "degree")
        if not degrees:
            raise ValueError("a multidegree needs at least one entry")
        if any(a < 0 for a in degrees):
            raise ValueError(f"degrees must be >= 0, got {degrees}")
        object.__setattr__(self, "degrees", degrees)

    @property
    def total(self) -> int:
        return sum(self.degrees)

    def __len__(self):
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __add__(self, other: "Multidegree") -> "Multidegree":
        if len(self) != len(other):
            raise ValueError("multidegree lengths differ")
        return Multidegree(tuple(x + y for x, y in zip(self, other)))


def as_shape(shape) -> Shape:
    return shape if isinstance(shape, Shape) else Shape(tuple(shape))


def as_degree(degree) -> Multidegree:
    return degree if isinstance(degree, Multidegree) else Multidegree(tuple(degree))


def _check_lengths(shape: Shape, degree: Multidegree) -> None:
    if len(shape) != len(degree):
        raise ValueError(
            f"shape has {len(shape)} factors but degree has {len(degree)} entries"
        )


@dataclass(frozen=True)
class VarietySpec:
    """The Segre-Veronese variety ``V_{n,a}``; ``N`` and ``n`` are derived."""

    shape: Shape
    degree: Multidegree
    n_total: int = field(init=False)
    N: int = field(init=False)

    def __post_init__(self):
        shape, degree = as_shape(self.shape), as_degree(self.degree)
        _check_lengths(shape, degree)
        if any(a < 1 for a in degree):
            raise ValueError(f"an embedding needs every degree >= 1, got {degree.degrees}")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "n_total", shape.n_total)
        object.__setattr__(self, "N", multidegree_dimension(shape, degree) - 1)

    @classmethod
    def of(cls, factors: Sequence[int], degrees: Sequence[int]) -> "VarietySpec":
        return cls(Shape(tuple(factors)), Multidegree(tuple(degrees)))

    def to_dict(self) -> dict:
        return {
            "factors": list(self.shape.factors),
            "degree": list(self.degree.degrees),
            "n": self.n_total,
            "N": self.N,
        }

    def __str__(self):
        return f"V[{self.shape.factors},{self.degree.degrees}]"


# A multigraded monomial: one exponent row per factor, row i of length n_i + 1.
MultiMonomial = tuple[tuple[int, ...], ...]


def multidegree_dimension(shape, degree) -> int:
    """Return ``dim R_a = prod_i C(n_i + a_i, n_i)``.

    Raises:
        ValueError: if the lengths differ.
        OverflowError: if the count leaves the signed 64-bit range.
    """
    shape, degree = as_shape(shape), as_degree(degree)
    _check_lengths(shape, degree)
    value = prod(comb(n + a, n) for n, a in zip(shape, degree))
    if value > INT64_MAX:
        raise OverflowError(f"dim R_a = {value} exceeds the 64-bit range")
    return value


def _block_exponents(n: int, a: int) -> list[tuple[int, ...]]:
    # combinations_with_replacement yields exponent vectors in lex-descending
    # order: x0^a first, x_n^a last.
    rows = []
    for combo in combinations_with_replacement(range(n + 1), a):
        row = [0] * (n + 1)
        for j in combo:
            row[j] += 1
        rows.append(tuple(row))
    return rows


def enumerate_monomials(shape, degree, size_cap: int = DEFAULT_SIZE_CAP) -> list[MultiMonomial]:
    """All monomials of multidegree ``degree``, in the canonical column order.

    Each factor block is listed lex-descending (``x0^a`` first) and the
    blocks are combined with the first factor varying slowest.
    """
    shape, degree = as_shape(shape), as_degree(degree)
    count = multidegree_dimension(shape, degree)
    if count > size_cap:
        raise SizeCapError(f"{count} monomials exceeds the size cap {size_cap}")
    blocks = [_block_exponents(n, a) for n, a in zip(shape, degree)]
    return [tuple(m) for m in product(*blocks)]


def flatten_exponents(monomial: MultiMonomial) -> tuple[int, ...]:
    """Concatenate the per-factor rows into one vector over all ``n + t`` variables."""
    return tuple(e for row in monomial for e in row)


def expected_secant_dim(N: int, n: int, s: int) -> int:
    """``min{N, s n + s - 1}``."""
    if s < 1:
        raise ValueError("s must be >= 1")
    return min(N, s * n + s - 1)


def expected_grassmann_dim(N: int, n: int, k: int, s: int) -> int:
    """Expected dimension of the Grassmann secant of ``k``-planes on ``s`` points."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if s < k + 1:
        raise ValueError(f"a {k}-plane needs at least {k + 1} spanning points, got s={s}")
    return min(s * n + (k + 1) * (s - k - 1), (k + 1) * (N - k))
