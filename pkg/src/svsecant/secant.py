"""Secant and Grassmann-secant dimensions of Segre-Veronese varieties.

``dim V^s = H(Z, a) - 1`` where ``Z`` is ``s`` generic 2-fat points.  ``H`` is
computed by the multigraded route, the reduced single-projective-space
route, or both on the same points.  Defects are reported against
``min{N, s n + s - 1}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import ceil
from typing import Callable

import numpy as np

from .combinat import (
    Multidegree,
    Shape,
    VarietySpec,
    enumerate_monomials,
    expected_grassmann_dim,
    expected_secant_dim,
    flatten_exponents,
    multidegree_dimension,
)
from .config import RunConfig
from .fatpoints import (
    FatPointScheme,
    conditions_matrix,
    hilbert_function,
    monomial_exponent_array,
    sample_points,
    stack_condition_rows,
)
from .modlinalg import matvec, max_over_trials, nullspace, rank, trial_rng
from .reduction import claim_basis, project_point

RANK_CAVEAT = (
    "random-point rank is a lower bound for the generic Hilbert function; "
    "dim_actual is a lower bound and defect an upper bound unless corroborated"
)


class MethodDisagreement(RuntimeError):
    """The multigraded and reduced ranks differ on the same points."""

    def __init__(self, spec: VarietySpec, s: int, trial: int, direct: int, reduced: int):
        self.spec, self.s, self.trial = spec, s, trial
        self.direct, self.reduced = direct, reduced
        super().__init__(
            f"{spec} s={s} trial={trial}: direct rank {direct} != reduced rank {reduced}"
        )


def _spec(spec) -> VarietySpec:
    if isinstance(spec, VarietySpec):
        return spec
    factors, degrees = spec
    return VarietySpec.of(factors, degrees)


@dataclass(frozen=True)
class SplitCertificate:
    """A splitting ``a = b + c`` with forms of degree ``b`` and ``c`` through ``s`` points.

    Their product is singular at every point, so it is an unexpected element
    of ``(I_Z)_a``.  It proves defectivity only when the expected dimension
    is ``N`` (``proves_defect``).
    """

    b: tuple[int, ...]
    c: tuple[int, ...]
    dim_Ib: int
    dim_Ic: int
    proves_defect: bool

    def __post_init__(self):
        if any(x < 0 for x in self.b + self.c):
            raise ValueError("split degrees must be >= 0")

    @property
    def valid(self) -> bool:
        return self.dim_Ib >= 1 and self.dim_Ic >= 1

    def to_dict(self) -> dict:
        return {
            "b": list(self.b),
            "c": list(self.c),
            "dim_Ib": self.dim_Ib,
            "dim_Ic": self.dim_Ic,
            "proves_defect": self.proves_defect,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SplitCertificate":
        return cls(tuple(d["b"]), tuple(d["c"]), d["dim_Ib"], d["dim_Ic"], d["proves_defect"])


@dataclass(frozen=True)
class SecantReport:
    spec: VarietySpec
    s: int
    hilbert: int
    dim_actual: int
    dim_expected: int
    defect: int
    method: str
    certificate: SplitCertificate | None = None
    metadata: dict = field(default_factory=dict, compare=True)

    def __post_init__(self):
        if self.dim_actual != self.hilbert - 1:
            raise ValueError("dim_actual must equal hilbert - 1")
        if self.defect != self.dim_expected - self.dim_actual:
            raise ValueError("defect must equal dim_expected - dim_actual")
        if not (self.dim_actual <= self.dim_expected <= self.spec.N):
            raise ValueError(
                f"{self.spec} s={self.s}: dim {self.dim_actual} exceeds expected "
                f"{self.dim_expected} (or expected exceeds N={self.spec.N})"
            )

    @property
    def defective(self) -> bool:
        return self.defect > 0

    @property
    def certified(self) -> bool:
        c = self.certificate
        return c is not None and c.valid and c.proves_defect

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "s": self.s,
            "hilbert": self.hilbert,
            "dim_actual": self.dim_actual,
            "dim_expected": self.dim_expected,
            "defect": self.defect,
            "method": self.method,
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "metadata": self.metadata,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SecantReport":
        spec = VarietySpec.of(d["spec"]["factors"], d["spec"]["degree"])
        cert = d.get("certificate")
        return cls(
            spec,
            d["s"],
            d["hilbert"],
            d["dim_actual"],
            d["dim_expected"],
            d["defect"],
            d["method"],
            SplitCertificate.from_dict(cert) if cert else None,
            d.get("metadata", {}),
        )


def _condition_ranker(spec: VarietySpec, config: RunConfig, multiplicity: int = 2
                      ) -> Callable[[int, int], int]:
    """Return ``run(s, trial)`` giving the rank on the trial's first ``s`` points."""
    field = config.field
    shape = spec.shape
    direct_exps = reduced_exps = None
    if config.method in ("direct", "both"):
        direct_exps = monomial_exponent_array(shape, spec.degree, config.size_cap)
    if config.method in ("reduced", "both"):
        basis = claim_basis(shape, spec.degree, config.size_cap)
        reduced_exps = basis.exponent_array(shape.n_total + 1)

    def run(s: int, trial: int) -> int:
        pts = sample_points(trial_rng(config.seed, trial), shape, s, field)
        ranks = {}
        if direct_exps is not None:
            coords = [pt.coordinates() for pt in pts]
            ranks["direct"] = rank(stack_condition_rows(direct_exps, coords, multiplicity, field))
        if reduced_exps is not None:
            coords = [project_point(pt).coords for pt in pts]
            ranks["reduced"] = rank(stack_condition_rows(reduced_exps, coords, multiplicity, field))
        if len(set(ranks.values())) > 1:
            raise MethodDisagreement(spec, s, trial, ranks["direct"], ranks["reduced"])
        return next(iter(ranks.values()))

    return run


def secant_dimension(spec, s: int, config: RunConfig, certify: bool = True) -> SecantReport:
    """Dimension and defect of ``V^s``.

    Raises:
        MethodDisagreement: when ``config.method == "both"`` and the two
            routes give different ranks on some trial.
        SizeCapError: when the monomial count exceeds ``config.size_cap``.
    """
    spec = _spec(spec)
    if s < 1:
        raise ValueError("s must be >= 1")
    run = _condition_ranker(spec, config)
    ranks = max_over_trials(lambda trial: run(s, trial), config.trials)
    hilbert = max(ranks)
    expected = expected_secant_dim(spec.N, spec.n_total, s)
    cert = None
    if hilbert - 1 < expected and certify:
        cert = find_split_certificate(spec, s, config)
    metadata = {
        "prime": config.prime,
        "seed": config.seed,
        "trials": len(ranks),
        "per_trial_ranks": list(ranks),
        "caveat": RANK_CAVEAT,
    }
    return SecantReport(spec, s, hilbert, hilbert - 1, expected, expected - (hilbert - 1),
                        config.method, cert, metadata)


def _splittings(degree: tuple[int, ...]):
    """Pairs ``(b, c)`` with ``b + c = degree``, both nonzero, ``b >= c`` lexicographically."""
    zero = tuple(0 for _ in degree)
    for b in product(*(range(a + 1) for a in degree)):
        c = tuple(a - x for a, x in zip(degree, b))
        if b == zero or c == zero or b < c:
            continue
        yield b, c


def simple_ideal_dimension(shape, degree, s: int, config: RunConfig) -> int:
    """``dim (I_Z)_degree`` for ``s`` generic simple points, by rank."""
    dim_r = multidegree_dimension(shape, degree)
    if s == 0:
        return dim_r
    return dim_r - hilbert_function(shape, s, 1, degree, config).rank


def find_split_certificate(spec, s: int, config: RunConfig) -> SplitCertificate | None:
    """First splitting ``a = b + c`` whose two pieces both vanish on ``s`` generic points.

    Returns ``None`` when no splitting works.  The returned certificate is a
    defectivity proof only if ``proves_defect`` is set.
    """
    spec = _spec(spec)
    fills = expected_secant_dim(spec.N, spec.n_total, s) == spec.N
    cache: dict[tuple[int, ...], int] = {}

    def dim_i(deg):
        if deg not in cache:
            cache[deg] = simple_ideal_dimension(spec.shape, Multidegree(deg), s, config)
        return cache[deg]

    for b, c in _splittings(spec.degree.degrees):
        # generic simple points impose independent conditions
        if multidegree_dimension(spec.shape, b) <= s or multidegree_dimension(spec.shape, c) <= s:
            continue
        ib, ic = dim_i(b), dim_i(c)
        if ib >= 1 and ic >= 1:
            return SplitCertificate(b, c, ib, ic, fills)
    return None


def _multiply_forms(shape: Shape, b, f1: np.ndarray, c, f2: np.ndarray, degree, p: int) -> np.ndarray:
    mb = [flatten_exponents(m) for m in enumerate_monomials(shape, b)]
    mc = [flatten_exponents(m) for m in enumerate_monomials(shape, c)]
    index = {flatten_exponents(m): k for k, m in enumerate(enumerate_monomials(shape, degree))}
    out = np.zeros(len(index), dtype=np.int64)
    for i, u in enumerate(mb):
        if f1[i] == 0:
            continue
        for j, v in enumerate(mc):
            if f2[j] == 0:
                continue
            k = index[tuple(x + y for x, y in zip(u, v))]
            out[k] = (out[k] + int(f1[i]) * int(f2[j])) % p
    return out


@dataclass(frozen=True)
class CertificateCheck:
    dims_match_count: bool
    product_nonzero: bool
    product_singular: bool

    @property
    def ok(self) -> bool:
        return self.dims_match_count and self.product_nonzero and self.product_singular


def validate_certificate(spec, s: int, cert: SplitCertificate, config: RunConfig) -> CertificateCheck:
    """Check a certificate without reusing the search.

    Generic simple points impose independent conditions, so
    ``dim I_b = max(0, dim R_b - s)`` must match the ranked value.  Then an
    explicit ``f1 * f2`` built from kernel vectors on fresh points must be a
    nonzero form singular at every point.
    """
    spec = _spec(spec)
    field = config.field
    counted = all(
        dim == max(0, multidegree_dimension(spec.shape, deg) - s)
        for deg, dim in ((cert.b, cert.dim_Ib), (cert.c, cert.dim_Ic))
    )
    pts = sample_points(trial_rng(config.seed ^ 0x5EC0, 0), spec.shape, s, field)
    kernels = []
    for deg in (cert.b, cert.c):
        m = conditions_matrix(FatPointScheme(spec.shape, tuple(pts), 1), deg, config.size_cap, field)
        ker = nullspace(m)
        if ker.shape[0] == 0:
            return CertificateCheck(counted, False, False)
        kernels.append(ker[0])
    g = _multiply_forms(spec.shape, cert.b, kernels[0], cert.c, kernels[1], spec.degree, field.p)
    fat = conditions_matrix(FatPointScheme(spec.shape, tuple(pts), 2), spec.degree,
                            config.size_cap, field)
    return CertificateCheck(counted, bool(np.any(g)), not np.any(matvec(fat, g)))


# ---------------------------------------------------------------------------
# Grassmann secants through the product X x P^k
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GrassmannReport:
    base_spec: VarietySpec
    k: int
    s: int
    product_spec: VarietySpec
    dim_expected: int
    product_defect: int
    dim_actual: int
    defect: int
    product_report: SecantReport

    def to_dict(self) -> dict:
        return {
            "base_spec": self.base_spec.to_dict(),
            "k": self.k,
            "s": self.s,
            "product_spec": self.product_spec.to_dict(),
            "dim_expected": self.dim_expected,
            "product_defect": self.product_defect,
            "dim_actual": self.dim_actual,
            "defect": self.defect,
            "product_report": self.product_report.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GrassmannReport":
        base = VarietySpec.of(d["base_spec"]["factors"], d["base_spec"]["degree"])
        prod_spec = VarietySpec.of(d["product_spec"]["factors"], d["product_spec"]["degree"])
        return cls(base, d["k"], d["s"], prod_spec, d["dim_expected"], d["product_defect"],
                   d["dim_actual"], d["defect"], SecantReport.from_dict(d["product_report"]))


def product_spec(base: VarietySpec, k: int) -> VarietySpec:
    """``X x P^k`` with degree 1 on the new factor; ``k = 0`` leaves ``X`` unchanged."""
    if k == 0:
        return base
    return VarietySpec.of(base.shape.factors + (k,), base.degree.degrees + (1,))


def grassmann_secant_dimension(spec, k: int, s: int, config: RunConfig) -> GrassmannReport:
    """Dimension of the ``(k, s-1)`` Grassmann secant via the product's ``s``-secant defect."""
    spec = _spec(spec)
    expected = expected_grassmann_dim(spec.N, spec.n_total, k, s)
    prod_spec = product_spec(spec, k)
    report = secant_dimension(prod_spec, s, config)
    return GrassmannReport(spec, k, s, prod_spec, expected, report.defect,
                           expected - report.defect, report.defect, report)


# ---------------------------------------------------------------------------
# Known-answer classifications
# ---------------------------------------------------------------------------


def classify_p1xp1(a1: int, a2: int, s: int) -> tuple[int, int]:
    """Predicted ``(dim V^s, defect)`` for ``P^1 x P^1`` in bidegree ``(a1, a2)``.

    Defective only for ``(2d, 2)`` with ``s = 2d + 1``, where ``dim = 3s - 2``.
    """
    a1, a2 = max(a1, a2), min(a1, a2)
    if a2 < 1 or s < 1:
        raise ValueError("degrees and s must be >= 1")
    N = (a1 + 1) * (a2 + 1) - 1
    expected = expected_secant_dim(N, 2, s)
    if a2 == 2 and a1 % 2 == 0 and s == a1 + 1:
        return 3 * s - 2, 1
    return expected, 0


def classify_p1cubed(a1: int, a2: int, a3: int, s: int) -> tuple[int, int]:
    """Predicted ``(dim V^s, defect)`` for ``(P^1)^3`` in degree ``(a1, a2, a3)``.

    Exceptions: ``(2, 2, 2)`` at ``s = 7`` with defect 2, and ``(2j, 1, 1)``
    at ``s = 2j + 1`` with defect 1.

    The ``(2, 2, 2)`` prediction is kept as given even though the rank is
    provably 26 (defect 1): an exact rank over Q at integer points bounds it
    below, and the square of the unique ``(1, 1, 1)`` form bounds it above.
    """
    a1, a2, a3 = sorted((a1, a2, a3), reverse=True)
    if a3 < 1 or s < 1:
        raise ValueError("degrees and s must be >= 1")
    N = (a1 + 1) * (a2 + 1) * (a3 + 1) - 1
    expected = expected_secant_dim(N, 3, s)
    if (a1, a2, a3) == (2, 2, 2) and s == 7:
        return expected - 2, 2
    if a2 == a3 == 1 and a1 % 2 == 0 and s == a1 + 1:
        return expected - 1, 1
    return expected, 0


# ---------------------------------------------------------------------------
# The list of defective families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DefectiveExample:
    family: str
    params: dict
    shape: tuple[int, ...]
    degree: tuple[int, ...]
    s: int
    b: tuple[int, ...] | None
    c: tuple[int, ...] | None

    @property
    def spec(self) -> VarietySpec:
        return VarietySpec.of(self.shape, self.degree)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _fam_p1_pm(m, k):
    _need(m >= 1 and k >= 1, "P1 x Pm (2k,2): need m >= 1, k >= 1")
    return (1, m), (2 * k, 2), ceil((2 * k + 1) * (m + 1) / 2), (k, 1), (k, 1)


def _fam_p2_p2():
    return (2, 2), (2, 2), 8, (1, 1), (1, 1)


def _fam_p1_p1_pm_112(m):
    _need(m >= 1, "P1 x P1 x Pm (1,1,2): need m >= 1")
    return (1, 1, m), (1, 1, 2), 2 * m + 1, (1, 0, 1), (0, 1, 1)


def _fam_p1_pm_pm(m, k):
    _need(m >= 1 and k >= 1, "P1 x Pm x Pm (2k,1,1): need m >= 1, k >= 1")
    return (1, m, m), (2 * k, 1, 1), k * m + k + m, (k, 1, 0), (k, 0, 1)


def _fam_p1_pr_pm(r, m):
    _need(r >= 1 and m >= 1, "P1 x Pr x Pm (r+m,1,1): need r, m >= 1")
    # Pieces of degree (m,1,0) and (r,0,1) each have dimension rm+r+m+1 = s+1.
    return (1, r, m), (r + m, 1, 1), r * m + r + m, (m, 1, 0), (r, 0, 1)


def _fam_p1_p1_pm_222(m):
    _need(1 <= m <= 3, "P1 x P1 x Pm (2,2,2): need 1 <= m <= 3")
    return (1, 1, m), (2, 2, 2), 4 * m + 3, (1, 1, 1), (1, 1, 1)


def _fam_p2_pm_pm(m):
    _need(m >= 1, "P2 x Pm x Pm (2,1,1): need m >= 1")
    return (2, m, m), (2, 1, 1), 3 * m + 2, (1, 1, 0), (1, 0, 1)


def _fam_p1_p1_p2_p5():
    return (1, 1, 2, 5), (2, 1, 1, 1), 11, (1, 1, 1, 0), (1, 0, 0, 1)


def _fam_p1cubed_p2m1(m):
    _need(m > 1, "P1 x P1 x P1 x P(2m-1) (m,1,1,1): need m > 1")
    return (1, 1, 1, 2 * m - 1), (m, 1, 1, 1), 4 * m - 1, (m - 1, 1, 1, 0), (1, 0, 0, 1)


def _fam_p1cubed_p2m(m):
    _need(m >= 4, "P1 x P1 x P1 x P(2m) (m,1,1,1): need m >= 4")
    return (1, 1, 1, 2 * m), (m, 1, 1, 1), 4 * m - 1, (m - 1, 1, 1, 0), (1, 0, 0, 1)


DEFECTIVE_FAMILIES: dict[str, tuple[Callable, tuple[str, ...]]] = {
    "P1xPm(2k,2)": (_fam_p1_pm, ("m", "k")),
    "P2xP2(2,2)": (_fam_p2_p2, ()),
    "P1xP1xPm(1,1,2)": (_fam_p1_p1_pm_112, ("m",)),
    "P1xPmxPm(2k,1,1)": (_fam_p1_pm_pm, ("m", "k")),
    "P1xPrxPm(r+m,1,1)": (_fam_p1_pr_pm, ("r", "m")),
    "P1xP1xPm(2,2,2)": (_fam_p1_p1_pm_222, ("m",)),
    "P2xPmxPm(2,1,1)": (_fam_p2_pm_pm, ("m",)),
    "P1xP1xP2xP5(2,1,1,1)": (_fam_p1_p1_p2_p5, ()),
    "P1^3xP(2m-1)(m,1,1,1)": (_fam_p1cubed_p2m1, ("m",)),
    "P1^3xP(2m)(m,1,1,1)": (_fam_p1cubed_p2m, ("m",)),
}

# The (m,1,1,1) family on P1^3 x P^{2m-1} at m = 1: defective (dim 13, not 14)
# but not through a splitting.
ANOMALOUS_EXAMPLE = DefectiveExample(
    "P1^4(1,1,1,1)", {"m": 1}, (1, 1, 1, 1), (1, 1, 1, 1), 3, None, None
)


def instantiate_family(name: str, **params) -> DefectiveExample:
    """One defective example; raises ``ValueError`` outside the family's range."""
    builder, names = DEFECTIVE_FAMILIES[name]
    missing = [p for p in names if p not in params]
    if missing:
        raise ValueError(f"{name} needs parameters {missing}")
    used = {p: params[p] for p in names}
    shape, degree, s, b, c = builder(**used)
    return DefectiveExample(name, used, shape, degree, s, b, c)


def defective_example_table(m: int = 1, k: int = 1, r: int = 1) -> list[DefectiveExample]:
    """Every family that is legal at ``(m, k, r)``, in listed order."""
    out = []
    for name in DEFECTIVE_FAMILIES:
        try:
            out.append(instantiate_family(name, m=m, k=k, r=r))
        except ValueError:
            continue
    return out


def smallest_defective_examples() -> list[DefectiveExample]:
    """Each family at small legal parameters, plus the anomalous ``(P^1)^4`` case."""
    grid = {
        "P1xPm(2k,2)": [dict(m=m, k=k) for k in (1, 2) for m in (1, 2, 3)],
        "P2xP2(2,2)": [{}],
        "P1xP1xPm(1,1,2)": [dict(m=m) for m in (1, 2, 3)],
        "P1xPmxPm(2k,1,1)": [dict(m=m, k=k) for k in (1, 2) for m in (1, 2, 3)],
        "P1xPrxPm(r+m,1,1)": [dict(r=r, m=m) for r in (1, 2) for m in (1, 2, 3)],
        "P1xP1xPm(2,2,2)": [dict(m=m) for m in (1, 2, 3)],
        "P2xPmxPm(2,1,1)": [dict(m=m) for m in (1, 2, 3)],
        "P1xP1xP2xP5(2,1,1,1)": [{}],
        "P1^3xP(2m-1)(m,1,1,1)": [dict(m=m) for m in (2, 3)],
        "P1^3xP(2m)(m,1,1,1)": [dict(m=4)],
    }
    out = [instantiate_family(name, **p) for name, plist in grid.items() for p in plist]
    out.append(ANOMALOUS_EXAMPLE)
    return out


def check_small_s_expected(shape, degree, s: int, config: RunConfig) -> bool:
    """Whether ``dim V^s = s(n + 1) - 1`` for ``s <= n_1 + 1`` (smallest factor).

    Raises ``ValueError`` for ``s > n_1 + 1`` and for the excluded Segre
    case ``t = 2``, degree ``(1, 1)``.
    """
    pairs = sorted(zip(shape, degree))
    shape = tuple(n for n, _ in pairs)
    degree = tuple(a for _, a in pairs)
    if len(shape) == 2 and degree == (1, 1):
        raise ValueError("t = 2 with degree (1, 1) is excluded")
    if not 1 <= s <= shape[0] + 1:
        raise ValueError(f"need 1 <= s <= n_1 + 1 = {shape[0] + 1}")
    report = secant_dimension(VarietySpec.of(shape, degree), s, config, certify=False)
    return report.dim_actual == s * (sum(shape) + 1) - 1
