import sys

import pytest

from fivefib.enumerator import K2Family, certify_max_genus


@pytest.fixture(scope="session")
def table_2_3g():
    return certify_max_genus(K2Family.TWO_MINUS_3G)


@pytest.fixture(scope="session")
def table_3_3g():
    return certify_max_genus(K2Family.THREE_MINUS_3G)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.report_lines():
        terminalreporter.write_line(line)
