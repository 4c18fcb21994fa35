import pytest


def pytest_addoption(parser):
    parser.addoption("--trmod", required=True, help="path to the trmod executable")


@pytest.fixture(scope="session")
def trmod(request):
    return request.config.getoption("--trmod")
