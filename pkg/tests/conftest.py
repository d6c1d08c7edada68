import pytest

CRITERIA: dict[int, tuple[bool, str]] = {}


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", default=False,
                     help="run long computations (full E8 table)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended"):
        return
    skip = pytest.mark.skip(reason="extended run; enable with --extended")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def criterion():
    """Record one pass/fail line for an acceptance criterion."""
    def record(number: int, ok: bool, detail: str = ""):
        CRITERIA[number] = (ok, detail)
        assert ok, f"criterion {number}: {detail}"
    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        ok, detail = CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
