from __future__ import annotations

import pytest

ACCEPTANCE_RESULTS: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def criterion(request):
    """Run an acceptance check and print a single PASS/FAIL line for it."""

    def run(number: int, title: str, check):
        try:
            check()
        except BaseException:
            ACCEPTANCE_RESULTS[number] = (title, False)
            print(f"FAIL  criterion {number:2d}: {title}")
            raise
        ACCEPTANCE_RESULTS[number] = (title, True)
        print(f"PASS  criterion {number:2d}: {title}")

    return run


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, ok = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number:2d}: {title}")
