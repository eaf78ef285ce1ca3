import pytest

ACCEPTANCE_LINES = []


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False,
                     help="include the exhaustive local-fertility boundary sweeps")


@pytest.fixture
def slow(request):
    return request.config.getoption("--slow")


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda ln: int(ln.split('[')[1].split(']')[0])):
            terminalreporter.write_line(line)
