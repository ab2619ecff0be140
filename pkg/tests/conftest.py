import pytest

from seshconf.geometry import build_fermat_quartic_lines


@pytest.fixture(scope="session")
def quartic():
    return build_fermat_quartic_lines()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS, key=lambda k: (k == 0, k)):
            terminalreporter.write_line(RESULTS[key])
