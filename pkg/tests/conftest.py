import pytest

from matroid_dd import _backend, kernels
from matroid_dd.generators import fixture_set


@pytest.fixture(scope="session")
def fixtures():
    return fixture_set(seed=0)


@pytest.fixture(params=["numpy", "numba"])
def backend(request):
    if request.param == "numba" and not _backend.HAVE_NUMBA:
        pytest.skip("numba not installed")
    prev = kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(prev)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    verdicts = getattr(mod, "VERDICTS", None)
    if verdicts:
        terminalreporter.section("acceptance criteria")
        for num in sorted(verdicts):
            terminalreporter.write_line(verdicts[num])
