from __future__ import annotations

import sys

import pytest
from hypothesis import HealthCheck, settings

from brauer import dataset, parse
from brauer.algebra import build_algebra

from treegen import LINE

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

@pytest.fixture
def line():
    return parse(LINE)


@pytest.fixture
def line_alg(line):
    return build_algebra(line, 1)


@pytest.fixture(scope="session")
def ds():
    """Dataset trees by id, loaded once."""
    return {tid: dataset.load(tid) for tid in dataset.list_ids()}


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
