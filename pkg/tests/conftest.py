"""Session-wide fixtures: full sweeps are expensive, so run each once."""

import pytest

from mc_lab.harness import sweep


@pytest.fixture(scope="session")
def sweep3():
    return sweep(3, keep_values=True)


@pytest.fixture(scope="session")
def sweep4():
    return sweep(4, keep_values=True)


@pytest.fixture(scope="session")
def sweep5():
    return sweep(5, keep_values=True)


@pytest.fixture(scope="session")
def sweep6():
    return sweep(6, keep_values=True)
