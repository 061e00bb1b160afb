"""Frozen verification suites for the classification results.

Each suite is a list of independent cases; running a case returns a
:class:`CaseResult`.  Ranges are constants here on purpose: a suite checks
fixed claims at desk scale, it is not a parameter sweep.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import ceil, comb
from typing import Callable

from .combinat import multidegree_dimension
from .config import RunConfig
from .modlinalg import trial_rng
from .reduction import verify_reduction
from .secant import (
    SplitCertificate,
    classify_p1cubed,
    classify_p1xp1,
    grassmann_secant_dimension,
    check_small_s_expected,
    secant_dimension,
    smallest_defective_examples,
    validate_certificate,
)

P1XP1_MAX_DEGREE = 8
P1CUBED_MAX_DEGREE = 4
REDUCTION_CASES = 50
REDUCTION_MAX_COLUMNS = 400
PRK_MAX = 3
SMALL_S_MAX_FACTOR = 3
SMALL_S_MAX_DEGREE = 3
LINE_ALPHAS = (1, 2, 3)
P1CUBED_MS = (2, 3)


@dataclass(frozen=True)
class CaseResult:
    suite: str
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "name": self.name, "passed": self.passed, "detail": self.detail}


Case = tuple[str, Callable[[RunConfig], tuple[bool, dict]]]


def _p1xp1_cases() -> list[Case]:
    cases = []
    for a1 in range(1, P1XP1_MAX_DEGREE + 1):
        for a2 in range(1, a1 + 1):
            N = (a1 + 1) * (a2 + 1) - 1
            for s in range(1, ceil((N + 1) / 3) + 2):
                def run(cfg, a1=a1, a2=a2, s=s):
                    r = secant_dimension(((1, 1), (a1, a2)), s, cfg, certify=False)
                    want = classify_p1xp1(a1, a2, s)
                    got = (r.dim_actual, r.defect)
                    return got == want, {"got": list(got), "expected": list(want)}
                cases.append((f"a=({a1},{a2}) s={s}", run))
    return cases


def _p1cubed_cases() -> list[Case]:
    cases = []
    for a1 in range(1, P1CUBED_MAX_DEGREE + 1):
        for a2 in range(1, a1 + 1):
            for a3 in range(1, a2 + 1):
                N = (a1 + 1) * (a2 + 1) * (a3 + 1) - 1
                for s in range(1, ceil((N + 1) / 4) + 2):
                    def run(cfg, a=(a1, a2, a3), s=s):
                        r = secant_dimension(((1, 1, 1), a), s, cfg, certify=False)
                        want = classify_p1cubed(*a, s)
                        got = (r.dim_actual, r.defect)
                        return got == want, {"got": list(got), "expected": list(want)}
                    cases.append((f"a={a1, a2, a3} s={s}", run))
    return cases


def reduction_instances(seed: int, count: int = REDUCTION_CASES) -> list[tuple[tuple, tuple, int, int]]:
    """Random ``(shape, degree, s, multiplicity)`` with ``t <= 4``, ``n_i, a_i <= 3``, ``s <= 8``."""
    rng = trial_rng(seed, 1_000_001)
    out = []
    while len(out) < count:
        t = int(rng.integers(1, 5))
        shape = tuple(int(x) for x in rng.integers(1, 4, size=t))
        degree = tuple(int(x) for x in rng.integers(1, 4, size=t))
        if multidegree_dimension(shape, degree) > REDUCTION_MAX_COLUMNS:
            continue
        s = int(rng.integers(1, 9))
        mult = 1 if len(out) % 5 == 4 else 2
        out.append((shape, degree, s, mult))
    return out


def _reduction_cases(seed: int) -> list[Case]:
    cases = []
    for i, (shape, degree, s, mult) in enumerate(reduction_instances(seed)):
        def run(cfg, shape=shape, degree=degree, s=s, mult=mult, i=i):
            sub = RunConfig(cfg.prime, (cfg.seed + i) % 2**63, cfg.trials, cfg.method, cfg.size_cap)
            chk = verify_reduction(shape, degree, s, sub, multiplicity=mult)
            return chk.agree, {"direct": chk.direct_rank, "reduced": chk.reduced_rank,
                               "columns": chk.columns}
        cases.append((f"#{i} n={shape} a={degree} s={s} mult={mult}", run))
    return cases


def _prk_cases() -> list[Case]:
    cases = []
    for r in range(1, PRK_MAX + 1):
        for k in range(1, PRK_MAX + 1):
            for s in range(1, comb(r + k, k) + 2):
                def run(cfg, r=r, k=k, s=s):
                    rep = secant_dimension(((r, k), (k + 1, 1)), s, cfg, certify=False)
                    return rep.defect == 0, {"dim": rep.dim_actual, "expected": rep.dim_expected}
                cases.append((f"r={r} k={k} s={s}", run))
    return cases


def small_s_instances() -> list[tuple[tuple, tuple, int]]:
    out = []
    for n1 in range(1, SMALL_S_MAX_FACTOR + 1):
        for n2 in range(n1, SMALL_S_MAX_FACTOR + 1):
            for a1 in range(1, SMALL_S_MAX_DEGREE + 1):
                for a2 in range(1, SMALL_S_MAX_DEGREE + 1):
                    if (a1, a2) == (1, 1):
                        continue
                    for s in range(1, n1 + 2):
                        out.append(((n1, n2), (a1, a2), s))
    for s in (1, 2):
        out.append(((1, 2, 2), (1, 1, 1), s))
    return out


def _small_s_cases() -> list[Case]:
    cases = []
    for shape, degree, s in small_s_instances():
        def run(cfg, shape=shape, degree=degree, s=s):
            ok = check_small_s_expected(shape, degree, s, cfg)
            return ok, {"target_dim": s * (sum(shape) + 1) - 1}
        cases.append((f"n={shape} a={degree} s={s}", run))
    return cases


def _family_cases() -> list[Case]:
    cases = []
    for ex in smallest_defective_examples():
        def run(cfg, ex=ex):
            rep = secant_dimension(ex.spec, ex.s, cfg)
            detail = {"dim": rep.dim_actual, "expected": rep.dim_expected, "N": ex.spec.N,
                      "defect": rep.defect}
            ok = rep.defect >= 1
            if ex.b is None:
                # the (P^1)^4 anomaly: exactly 13 against an expected 14
                ok = ok and rep.dim_actual == 13 and rep.dim_expected == 14
                return ok, detail
            if rep.dim_expected == ex.spec.N:
                dims = [max(0, multidegree_dimension(ex.shape, d) - ex.s) for d in (ex.b, ex.c)]
                cert = SplitCertificate(ex.b, ex.c, dims[0], dims[1], True)
                check = validate_certificate(ex.spec, ex.s, cert, cfg)
                found = rep.certificate
                detail["table_split"] = {"b": list(ex.b), "c": list(ex.c), "check": check.ok}
                detail["found_certificate"] = found.to_dict() if found else None
                ok = ok and cert.valid and check.ok and rep.certified
            return ok, detail
        label = ",".join(f"{k}={v}" for k, v in ex.params.items())
        cases.append((f"{ex.family}[{label}] s={ex.s}", run))
    return cases


def _grassmann_cases() -> list[Case]:
    cases = []
    for alpha in LINE_ALPHAS:
        def run(cfg, alpha=alpha):
            g = grassmann_secant_dimension(((1, 1), (2 * alpha, 1)), 1, 2 * alpha + 1, cfg)
            return g.defect == 1, {"dim": g.dim_actual, "expected": g.dim_expected}
        cases.append((f"P1xP1(2a,1) a={alpha} k=1 s={2 * alpha + 1}", run))
    for s in range(3, comb(4, 2) + 2):
        def run(cfg, s=s):
            g = grassmann_secant_dimension(((2,), (3,)), 2, s, cfg)
            return g.defect == 0, {"dim": g.dim_actual, "expected": g.dim_expected}
        cases.append((f"P2(3) k=2 s={s}", run))
    for m in P1CUBED_MS:
        def run(cfg, m=m):
            g = grassmann_secant_dimension(((1, 1, 1), (m, 1, 1)), 2 * m - 1, 4 * m - 1, cfg)
            return g.defect >= 1, {"dim": g.dim_actual, "expected": g.dim_expected,
                                   "defect": g.defect}
        cases.append((f"P1^3(m,1,1) m={m} k={2 * m - 1} s={4 * m - 1}", run))
    return cases


SUITES = ("thm2.1", "thm2.5", "prop2.3", "prop3.2", "sec3", "thm1.1", "grassmann")


def suite_cases(name: str, seed: int = 0) -> list[Case]:
    builders = {
        "thm2.1": _p1xp1_cases,
        "thm2.5": _p1cubed_cases,
        "prop2.3": _prk_cases,
        "prop3.2": _small_s_cases,
        "sec3": _family_cases,
        "thm1.1": lambda: _reduction_cases(seed),
        "grassmann": _grassmann_cases,
    }
    if name not in builders:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return builders[name]()


def run_suite(name: str, config: RunConfig, jobs: int = 1) -> list[CaseResult]:
    """Run every case; results come back in case order whatever ``jobs`` is."""
    cases = suite_cases(name, config.seed)

    def one(case: Case) -> CaseResult:
        label, fn = case
        passed, detail = fn(config)
        return CaseResult(name, label, bool(passed), detail)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(one, cases))
    return [one(c) for c in cases]


def summarize(results: list[CaseResult]) -> dict:
    passed = sum(r.passed for r in results)
    return {"cases": len(results), "passed": passed, "failed": len(results) - passed,
            "all_passed": passed == len(results)}

