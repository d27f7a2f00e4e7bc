import contextlib
import time

import pytest

_CRITERIA: list[str] = []


@pytest.fixture
def criterion():
    """Context manager recording one PASS/FAIL line per acceptance criterion."""

    @contextlib.contextmanager
    def record(number, title):
        start = time.perf_counter()
        status = "FAIL"
        try:
            yield
            status = "PASS"
        finally:
            elapsed = time.perf_counter() - start
            line = f"[{status}] criterion {number:>2}: {title} ({elapsed:.2f}s)"
            _CRITERIA.append(line)
            print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_CRITERIA, key=lambda l: int(l.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
