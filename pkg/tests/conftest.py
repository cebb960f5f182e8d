import contextlib
import os
import sys
import time

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

_LINES = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Context manager factory: ``with criterion(n, title, seconds):`` records one PASS/FAIL line."""
    lines = request.config.stash.setdefault(_LINES, [])

    @contextlib.contextmanager
    def run(number, title, limit):
        start = time.perf_counter()
        try:
            yield
        except AssertionError as exc:
            reason = str(exc).splitlines()[0] if str(exc) else "assertion failed"
            lines.append(f"FAIL  {number:>2}. {title} [{time.perf_counter() - start:.2f} s]: {reason}")
            raise
        elapsed = time.perf_counter() - start
        if elapsed > limit:
            lines.append(f"FAIL  {number:>2}. {title} [{elapsed:.2f} s]: over the {limit} s budget")
            raise AssertionError(f"took {elapsed:.2f} s, budget {limit} s")
        lines.append(f"PASS  {number:>2}. {title} [{elapsed:.2f} s]")

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s[5:8])):
            terminalreporter.write_line(line)
