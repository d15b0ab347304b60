import pytest

from permshape.rsk import warm_up


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # compile the JIT kernels once so timing-sensitive tests measure runtime,
    # not compilation
    warm_up()
