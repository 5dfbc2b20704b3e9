import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from primefree import Certificate, Pair, certify_pair  # noqa: E402


@pytest.fixture(scope="session")
def certs():
    cache = {}

    def get(t, d):
        if (t, d) not in cache:
            result = certify_pair(Pair(t, d))
            assert isinstance(result, Certificate), f"({t}, {d}) did not certify"
            cache[t, d] = result
        return cache[t, d]

    return get


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS, summary_lines
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in summary_lines():
            terminalreporter.write_line(line)
