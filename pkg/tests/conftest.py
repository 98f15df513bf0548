import pytest

from balfam import SetFamily

ACCEPTANCE_RESULTS = {}


@pytest.fixture
def fam():
    """Shorthand constructor: fam(n, [[1, 2], [3]])."""
    def make(n, sets, allow_duplicates=False):
        return SetFamily.from_sets(n, sets, allow_duplicates)
    return make


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        ok, label = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {label}")
