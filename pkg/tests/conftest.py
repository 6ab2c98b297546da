import pytest

ACCEPTANCE_KEY = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[ACCEPTANCE_KEY] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the line is printed in the terminal summary."""
    lines = request.config.stash[ACCEPTANCE_KEY]

    def record(k, ok, detail):
        lines[k] = f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        assert ok, detail
    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash[ACCEPTANCE_KEY]
    if lines:
        terminalreporter.section("acceptance criteria")
        for k in sorted(lines):
            terminalreporter.write_line(lines[k])
