import random

import pytest

from linrec import LinRec, PrimeField, NTT_PRIME

F = PrimeField(NTT_PRIME, generator=3)


def rand_poly(rng: random.Random, n: int, p: int = NTT_PRIME) -> list[int]:
    return [rng.randrange(p) for _ in range(n)]


def rand_linrec(rng: random.Random, ring, d: int) -> LinRec:
    p = ring.modulus
    return LinRec(ring, rand_poly(rng, d, p), rand_poly(rng, d, p))


@pytest.fixture
def field():
    return F


# -- acceptance summary ---------------------------------------------------------

_criteria: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if not name.startswith("test_criterion_"):
        return
    num = int(name.split("_")[2])
    if report.when == "call" or report.outcome != "passed":
        outcome = "PASS" if report.passed else "FAIL"
        prev = _criteria.get(num)
        if prev is None or prev[0] == "PASS":
            _criteria[num] = (outcome, name)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        outcome, name = _criteria[num]
        terminalreporter.write_line(f"criterion {num:2d}: {outcome}  ({name})")
