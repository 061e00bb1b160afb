import numpy as np
import pytest

from svsecant.modlinalg import FpMatrix, PrimeField, rank, trial_rng

ACCEPTANCE_LINES: list[str] = []


def pytest_sessionstart(session):
    # rank of (n x r) @ (r x m) random factors must be r; a broken eliminator fails here
    field = PrimeField()
    rng = trial_rng(20240601)
    for n, r, m in [(12, 5, 9), (20, 20, 30), (7, 1, 7)]:
        a = rng.integers(0, field.p, size=(n, r), dtype=np.int64)
        b = rng.integers(0, field.p, size=(r, m), dtype=np.int64)
        prod = np.zeros((n, m), dtype=np.int64)
        for k in range(r):
            prod = (prod + np.outer(a[:, k], b[k]) % field.p) % field.p
        got = rank(FpMatrix(field, prod))
        if got != r:
            raise pytest.UsageError(f"rank self-test failed: rank {got} != {r}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def field():
    return PrimeField()
