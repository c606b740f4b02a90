import pytest

from parabolic_cataland.context import all_compositions, get_context


def compositions_up_to(n_max):
    return [p for n in range(1, n_max + 1) for p in all_compositions(n)]


@pytest.fixture(scope="session")
def ctx212():
    return get_context((2, 1, 2))


@pytest.fixture(scope="session")
def ctx121():
    return get_context((1, 2, 1))


@pytest.fixture(scope="session")
def ctx111():
    return get_context((1, 1, 1))
