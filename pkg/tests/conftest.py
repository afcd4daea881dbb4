from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from intercat.instances import build_duoidal, build_span_cospan, build_terminal, build_z2

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def duoidal1():
    return build_duoidal(1)


@pytest.fixture(scope="session")
def duoidal2():
    return build_duoidal(2)


@pytest.fixture(scope="session")
def span1():
    return build_span_cospan(1)


@pytest.fixture(scope="session")
def terminal():
    return build_terminal()


@pytest.fixture(scope="session")
def z2():
    return build_z2()


# -- acceptance summary: one line per criterion ---------------------------------------------

_CRITERIA: dict[int, tuple[str, list[str]]] = {}


def pytest_runtest_logreport(report):
    marker = "test_acceptance.py::test_criterion_"
    if marker not in report.nodeid or (report.when != "call" and report.outcome != "failed"):
        return
    tail = report.nodeid.split(marker, 1)[1]
    num, _, name = tail.partition("_")
    title, outcomes = _CRITERIA.setdefault(int(num), (name.split("[")[0].replace("_", " "), []))
    outcomes.append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        title, outcomes = _CRITERIA[num]
        verdict = "PASS" if outcomes and all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {verdict}  {title}")
