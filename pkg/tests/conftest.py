import contextlib
import time

import pytest

_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Context manager recording one acceptance line, pass or fail."""

    @contextlib.contextmanager
    def record(label):
        t0 = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            _ACCEPTANCE.append((label, ok, time.perf_counter() - t0))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, secs in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  ({secs:.1f} s)")
