import pytest

from socios.stack import DemoStack


@pytest.fixture(scope="session")
def ro_stack():
    """Shared stack for read-only tests; never mutate fixtures or faults."""
    stack = DemoStack.launch()
    yield stack
    stack.stop()


@pytest.fixture()
def stack():
    """Fresh stack for tests that mutate state, inject faults or post."""
    stack = DemoStack.launch()
    yield stack
    stack.stop()
