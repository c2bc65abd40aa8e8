from __future__ import annotations

import pytest

from periodic_rt import make_tl_datum

ACCEPTANCE_COUNT = 12


def pytest_configure(config):
    config._acceptance_lines = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config._acceptance_lines
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n in range(1, ACCEPTANCE_COUNT + 1):
        terminalreporter.write_line(lines.get(n, f"criterion {n:2d}: FAIL (not reached: errored before reporting)"))


@pytest.fixture
def criterion(request):
    """record(n, title, ok, detail) stores one PASS/FAIL line and returns ok."""
    store = request.config._acceptance_lines

    def record(n: int, title: str, ok: bool, detail: str = "") -> bool:
        line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
        store[n] = line
        print(line)
        return ok

    return record


@pytest.fixture(scope="session")
def data():
    """Temperley-Lieb data for r = 3..6, built once."""
    return {r: make_tl_datum(r) for r in (3, 4, 5, 6)}
