import time

import pytest

from charp import repro

ACCEPTANCE_LINES: list[str] = []


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


@pytest.fixture(scope="session")
def cert_T():
    return timed(repro.repro_T, (2, 3, 5))


@pytest.fixture(scope="session")
def cert_A3():
    return {p: timed(repro.repro_A3, (p,)) for p in (2, 3)}


@pytest.fixture(scope="session")
def cert_A4():
    return {p: timed(repro.repro_A4, (p,)) for p in (2, 3)}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
