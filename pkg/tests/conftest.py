import numpy as np
import pytest

from lyapgmres import gallery
from lyapgmres.lyapunov import inverse_iteration


def random_matrix(rng, n, complex_=True):
    a = rng.standard_normal((n, n))
    if complex_:
        a = a + 1j * rng.standard_normal((n, n))
    return a


def right_half_plane_matrix(rng, n, margin=1.5):
    """``randn / sqrt(n) + (margin + U) I``: spectrum well inside Re z > 0."""
    return rng.standard_normal((n, n)) / np.sqrt(n) + (margin + rng.uniform()) * np.eye(n)


def random_hpd(rng, n):
    x = random_matrix(rng, n)
    return x.conj().T @ x + np.eye(n)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def integration100():
    return gallery.integration_matrix(100, 2.0)


@pytest.fixture(scope="session")
def family_s0(integration100):
    return inverse_iteration(integration100, np.eye(100), 5)


@pytest.fixture(scope="session")
def family_s05(integration100):
    return inverse_iteration(integration100, np.eye(100), 5, shift=0.5)


@pytest.fixture(scope="session")
def jordan100():
    return gallery.jordan_matrix(100, 1.1)


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[2].rstrip(":"))):
        terminalreporter.write_line(line)
