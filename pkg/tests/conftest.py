import pytest
from hypothesis import HealthCheck, settings

from lrsmash.fixtures import group_algebra, sweedler_candidate, sweedler_h4
from lrsmash.linfield import GF, Q

settings.register_profile("lrsmash", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("lrsmash")

F5 = GF(5)


@pytest.fixture(scope="session")
def kc2():
    return group_algebra(2, Q, "C2")


@pytest.fixture(scope="session")
def h4():
    return sweedler_h4(Q)


@pytest.fixture(scope="session")
def sweedler():
    return sweedler_candidate(Q)
