import pytest

from suncg import _kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # pay any JIT compilation up front so timed tests measure work, not compiles
    _kernels.warmup()
