import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record():
    """Collect one summary line per acceptance criterion."""

    def _record(number, passed, detail=""):
        line = f"criterion {number:>2}: {'PASS' if passed else 'FAIL'} {detail}".rstrip()
        ACCEPTANCE_LINES.append(line)
        print(line)

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
