import numpy as np
import pytest

from paritykick.experiments.models import three_site_ising

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture
def fig1_model():
    return three_site_ising(2, 4, 6).hamiltonian()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
