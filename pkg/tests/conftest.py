import pytest

_RESULTS = []


@pytest.fixture
def report():
    """Record one acceptance line; the test still asserts on its own."""

    def _report(num, title, ok, detail=""):
        line = f"CRITERION {num:>2} {title}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
        _RESULTS.append((num, line))
        print(line)

    return _report


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_RESULTS):
        terminalreporter.write_line(line)
