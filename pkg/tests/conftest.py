import sys
from pathlib import Path

import hypothesis
import pytest

sys.path.insert(0, str(Path(__file__).parent))

hypothesis.settings.register_profile("ci", max_examples=50, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile("ci")

from qndom import double, hamming_perfect_code, solve_min_dominating  # noqa: E402


@pytest.fixture(scope="session")
def witness6():
    res = solve_min_dominating(6)
    assert res.proven_optimal and res.optimum == 12
    return res.witness


@pytest.fixture(scope="session")
def witness12(witness6):
    D = witness6
    for _ in range(6):
        D = double(D)
    return D


@pytest.fixture(scope="session")
def perfect3():
    return hamming_perfect_code(2)


@pytest.fixture(scope="session")
def perfect7():
    return hamming_perfect_code(3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
