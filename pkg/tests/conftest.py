from __future__ import annotations

import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_LINES = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_LINES] = {}


@pytest.fixture
def criterion(request):
    """Time a block, assert it stays under budget, and log one PASS/FAIL line for it."""
    lines = request.config.stash[_LINES]

    @contextmanager
    def run(number: int, title: str, budget: float):
        t0 = time.perf_counter()
        ok = False
        try:
            yield
            dt = time.perf_counter() - t0
            assert dt < budget, f"took {dt:.1f}s, budget {budget:.0f}s"
            ok = True
        finally:
            dt = time.perf_counter() - t0
            line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title} ({dt:.1f}s, budget {budget:.0f}s)"
            lines[number] = line
            print(line)

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for k in sorted(lines):
            terminalreporter.write_line(lines[k])
