import numpy as np
import pytest

from twomode.dynamics import SystemParams

from strategies import random_evolved_state

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def fig_params():
    return SystemParams(m=1.0, omega1=1.0, omega2=1.0, lam=0.1)


@pytest.fixture(scope="session")
def random_states():
    rng = np.random.default_rng(20261019)
    return [random_evolved_state(rng) for _ in range(1000)]
