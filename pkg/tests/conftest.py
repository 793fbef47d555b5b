import pytest
from hypothesis import HealthCheck, settings

from seshadri.root_system import CartanData
from seshadri.strat_poset import build

settings.register_profile(
    "repo", deadline=None, derandomize=True, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def a1():
    return CartanData.from_type("A1")


@pytest.fixture(scope="session")
def a2():
    return CartanData.from_type("A2")


@pytest.fixture(scope="session")
def b2():
    return CartanData.from_type("B2")


@pytest.fixture(scope="session")
def sl3_adjoint(a2):
    return build(a2, (1, 1), "w0")


@pytest.fixture(scope="session")
def a1_two(a1):
    """A1 with lambda = 2 omega_1, tau = s_1: one edge of bond 2."""
    return build(a1, (2,), "1")


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
